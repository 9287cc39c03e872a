"""Gröbner bases of submodules of free modules over k[x_1..x_r].

A module element is a plain dict ``{(component, exponent): coefficient}``
holding raw field coefficients. Ideals are submodules of R^1. Syzygies are
read off an elimination basis: the generator block of the free module
dominates the auxiliary block that tracks cofactors, so basis elements with
no generator-block terms are exactly syzygies.
"""

from __future__ import annotations

import heapq

from operator import add
from typing import Dict, List, Optional, Sequence, Tuple

from .matrix import Matrix, ShapeError
from .poly import Exp, PolyRing, Polynomial, exp_divides, exp_lcm, exp_sub

Term = Tuple[int, Exp]
Vector = Dict[Term, object]


class ModuleOrder:
    """Monomial order on a free module of rank ``rank``.

    Components ``< eliminate`` form a block that dominates the rest. Inside a
    block terms compare by monomial first, then position (term over position);
    ``position_first`` switches to position over term.
    """

    def __init__(self, ring: PolyRing, rank: int, eliminate: int = 0, position_first: bool = False,
                 shifts: Sequence[int] = None):
        self.ring = ring
        self.rank = rank
        self.eliminate = eliminate
        self.position_first = position_first
        self.shifts = list(shifts) if shifts is not None else [0] * rank
        okey = ring.okey
        cache: Dict[Term, tuple] = {}
        elim = eliminate

        if position_first:
            def key(t):
                try:
                    return cache[t]
                except KeyError:
                    c, e = t
                    k = cache[t] = (c < elim, -c, okey[e])
                    return k
        else:
            def key(t):
                try:
                    return cache[t]
                except KeyError:
                    c, e = t
                    k = cache[t] = (c < elim, okey[e], -c)
                    return k
        self.key = key

    def sugar(self, v: Vector) -> int:
        sh = self.shifts
        return max(sum(e) + sh[c] for c, e in v)


# ---------------------------------------------------------------- vectors

def vector_from_column(column: Sequence[Polynomial], offset: int = 0) -> Vector:
    v: Vector = {}
    for i, f in enumerate(column):
        for e, c in f.terms_dict.items():
            v[(i + offset, e)] = c
    return v


def column_from_vector(ring: PolyRing, v: Vector, rank: int, offset: int = 0) -> List[Polynomial]:
    parts: List[dict] = [{} for _ in range(rank)]
    for (c, e), a in v.items():
        parts[c - offset][e] = a
    return [Polynomial(ring, d) for d in parts]


def _monic(v: Vector, key, F) -> Vector:
    lt = max(v, key=key)
    c = v[lt]
    if c == F.one:
        return v
    inv = F.inv(c)
    return {t: F.mul(a, inv) for t, a in v.items()}


class _Reducers:
    """Lead-term index of the active basis elements, bucketed by component."""

    def __init__(self):
        self.by_comp: Dict[int, List[Tuple[Exp, Vector]]] = {}

    def add(self, lead: Term, v: Vector):
        self.by_comp.setdefault(lead[0], []).append((lead[1], v))

    def remove(self, lead: Term, v: Vector):
        bucket = self.by_comp[lead[0]]
        for k, (e, w) in enumerate(bucket):
            if w is v:
                del bucket[k]
                return

    def find(self, t: Term):
        bucket = self.by_comp.get(t[0])
        if bucket:
            e = t[1]
            for le, v in bucket:
                if exp_divides(le, e):
                    return v, exp_sub(e, le)
        return None, None


def _sub_multiple(v: Vector, g: Vector, m: Exp, c, p: int):
    """v -= c * x^m * g, in place."""
    get = v.get
    if any(m):
        for (comp, e), a in g.items():
            t = (comp, tuple(map(add, e, m)))
            nv = get(t, 0) - c * a
            if p:
                nv %= p
            if nv:
                v[t] = nv
            else:
                del v[t]
    else:
        for t, a in g.items():
            nv = get(t, 0) - c * a
            if p:
                nv %= p
            if nv:
                v[t] = nv
            else:
                del v[t]


class _Desc:
    """Heap entry ordering terms largest first."""

    __slots__ = ("k", "t")

    def __init__(self, k, t):
        self.k = k
        self.t = t

    def __lt__(self, other):
        return self.k > other.k


def _normal_form(v: Vector, reducers: _Reducers, key, p: int, full: bool = True) -> Vector:
    """Reduce ``v`` by monic basis elements; ``full=False`` stops at the first irreducible lead term."""
    v = dict(v)
    out: Vector = {}
    if len(v) <= 12:
        while v:
            t = max(v, key=key)
            g, m = reducers.find(t)
            if g is None:
                if not full:
                    v.update(out)
                    return v
                out[t] = v.pop(t)
                continue
            _sub_multiple(v, g, m, v[t], p)
        return out
    # long vectors: a heap of pending terms instead of a max() scan per step.
    # Reduction only creates terms below the one being reduced, so a stale
    # entry is recognised by its term no longer being present in v.
    heap = [_Desc(key(t), t) for t in v]
    heapq.heapify(heap)
    get = v.get
    while heap:
        t = heapq.heappop(heap).t
        if t not in v:
            continue
        g, m = reducers.find(t)
        if g is None:
            if not full:
                v.update(out)
                return v
            out[t] = v.pop(t)
            continue
        c = v[t]
        for (comp, e), a in g.items():
            t2 = (comp, tuple(map(add, e, m)))
            old = get(t2)
            nv = (0 if old is None else old) - c * a
            if p:
                nv %= p
            if nv:
                v[t2] = nv
                if old is None:
                    heapq.heappush(heap, _Desc(key(t2), t2))
            elif old is not None:
                del v[t2]
    return out


def _spoly(g1: Vector, l1: Term, g2: Vector, l2: Term, p: int) -> Vector:
    lcm = exp_lcm(l1[1], l2[1])
    m1, m2 = exp_sub(lcm, l1[1]), exp_sub(lcm, l2[1])
    s: Vector = {}
    for (comp, e), a in g1.items():
        s[(comp, tuple(map(add, e, m1)))] = a
    _sub_multiple(s, g2, m2, 1, p)
    return s


class GroebnerBasis:
    """A reduced Gröbner basis, sorted by lead term (largest first)."""

    def __init__(self, ring: PolyRing, order: ModuleOrder, elements: List[Vector]):
        self.ring = ring
        self.order = order
        self.rank = order.rank
        key = order.key
        self.elements = sorted(elements, key=lambda v: key(max(v, key=key)), reverse=True)
        self.leads = [max(v, key=key) for v in self.elements]
        self._reducers = _Reducers()
        for lt, v in zip(self.leads, self.elements):
            self._reducers.add(lt, v)

    def __len__(self):
        return len(self.elements)

    def normal_form(self, v: Vector) -> Vector:
        return _normal_form(v, self._reducers, self.order.key, self.ring.field.characteristic)

    def contains(self, v: Vector) -> bool:
        return not _normal_form(v, self._reducers, self.order.key, self.ring.field.characteristic, full=False)

    def columns(self) -> List[List[Polynomial]]:
        return [column_from_vector(self.ring, v, self.rank) for v in self.elements]

    def polys(self) -> List[Polynomial]:
        """The basis of an ideal (rank one) as polynomials."""
        if self.rank != 1:
            raise ValueError("polys() needs a basis of an ideal")
        return [c[0] for c in self.columns()]

    def spairs_reduce_to_zero(self) -> bool:
        """Buchberger's criterion, checked over every pair."""
        p = self.ring.field.characteristic
        n = len(self.elements)
        for i in range(n):
            for j in range(i + 1, n):
                if self.leads[i][0] != self.leads[j][0]:
                    continue
                s = _spoly(self.elements[i], self.leads[i], self.elements[j], self.leads[j], p)
                if s and self.normal_form(s):
                    return False
        return True


def buchberger(vectors: Sequence[Vector], order: ModuleOrder, reduce_tails: bool = True,
               _stats: Optional[dict] = None) -> GroebnerBasis:
    """Buchberger's algorithm with the Gebauer–Möller pair criteria and sugar selection."""
    ring = order.ring
    F = ring.field
    p = F.characteristic
    key = order.key
    # the product criterion is only sound for ideals
    ideal_case = order.rank == 1

    G: List[Vector] = []
    L: List[Term] = []
    S: List[int] = []
    active: List[int] = []
    pairs: List[tuple] = []
    reducers = _Reducers()

    def update(h: int):
        nonlocal pairs, active
        ch, eh = L[h]
        cand = [g for g in active if L[g][0] == ch]
        lcms = {g: exp_lcm(L[g][1], eh) for g in cand}
        coprime = {g: ideal_case and all(a == 0 or b == 0 for a, b in zip(L[g][1], eh)) for g in cand}
        C = list(cand)
        D = []
        while C:
            g1 = C.pop(0)
            l1 = lcms[g1]
            if coprime[g1] or not (any(exp_divides(lcms[g2], l1) for g2 in C)
                                   or any(exp_divides(lcms[g2], l1) for g2 in D)):
                D.append(g1)
        E = [g for g in D if not coprime[g]]
        kept = []
        for pr in pairs:
            _, _, i, j, lcm, comp = pr
            if comp == ch and exp_divides(eh, lcm) and exp_lcm(L[i][1], eh) != lcm \
                    and exp_lcm(L[j][1], eh) != lcm:
                continue
            kept.append(pr)
        for g in E:
            lcm = lcms[g]
            sugar = max(S[g] + sum(lcm) - sum(L[g][1]), S[h] + sum(lcm) - sum(eh))
            kept.append((sugar, key((ch, lcm)), g, h, lcm, ch))
        pairs = kept
        still = []
        for g in active:
            if L[g][0] == ch and exp_divides(eh, L[g][1]):
                reducers.remove(L[g], G[g])
            else:
                still.append(g)
        still.append(h)
        active = still
        reducers.add(L[h], G[h])

    def insert(v: Vector, sugar: int):
        v = _monic(v, key, F)
        G.append(v)
        L.append(max(v, key=key))
        S.append(sugar)
        update(len(G) - 1)

    inputs = [v for v in vectors if v]
    inputs.sort(key=lambda v: key(max(v, key=key)))
    for v in inputs:
        v = _normal_form(v, reducers, key, p)
        if v:
            insert(v, order.sugar(v))

    npairs = 0
    while pairs:
        best = min(range(len(pairs)), key=lambda k: (pairs[k][0], pairs[k][1], pairs[k][2], pairs[k][3]))
        sugar, _, i, j, _, _ = pairs.pop(best)
        npairs += 1
        s = _spoly(G[i], L[i], G[j], L[j], p)
        if not s:
            continue
        h = _normal_form(s, reducers, key, p)
        if h:
            insert(h, sugar)

    basis = [G[g] for g in active]
    if reduce_tails:
        basis = interreduce(basis, order)
    if _stats is not None:
        _stats["pairs"] = npairs
        _stats["elements"] = len(G)
    return GroebnerBasis(ring, order, basis)


def interreduce(basis: List[Vector], order: ModuleOrder) -> List[Vector]:
    """Tail-reduce each (lead-irredundant, monic) element against the others."""
    key = order.key
    p = order.ring.field.characteristic
    out = []
    for k, v in enumerate(basis):
        others = _Reducers()
        for m, w in enumerate(basis):
            if m != k:
                others.add(max(w, key=key), w)
        lt = max(v, key=key)
        tail = dict(v)
        lead_c = tail.pop(lt)
        tail = _normal_form(tail, others, key, p) if tail else tail
        tail[lt] = lead_c
        out.append(tail)
    return out


# ------------------------------------------------------------- public API

def _ideal_order(ring: PolyRing) -> ModuleOrder:
    return ModuleOrder(ring, 1)


def groebner_ideal(gens: Sequence[Polynomial]) -> GroebnerBasis:
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator to know the ring")
    ring = gens[0].ring
    return buchberger([vector_from_column([f]) for f in gens], _ideal_order(ring))


def groebner_module(M: Matrix, position_first: bool = False) -> GroebnerBasis:
    """Gröbner basis of the column span of ``M``."""
    order = ModuleOrder(M.ring, M.nrows, position_first=position_first)
    return buchberger([vector_from_column(c) for c in M.columns()], order)


def normal_form(v, G: GroebnerBasis):
    """Normal form of a polynomial or a column (list of polynomials) modulo ``G``."""
    if isinstance(v, Polynomial):
        if G.rank != 1:
            raise ShapeError("polynomial reduced against a module basis")
        if v.ring != G.ring:
            raise ShapeError("ring mismatch in normal form")
        return column_from_vector(G.ring, G.normal_form(vector_from_column([v])), 1)[0]
    v = list(v)
    if len(v) != G.rank:
        raise ShapeError(f"vector of length {len(v)} reduced against a rank-{G.rank} basis")
    return column_from_vector(G.ring, G.normal_form(vector_from_column(v)), G.rank)


def _column_degree(col: Sequence[Polynomial]) -> int:
    return max((f.total_degree() for f in col if f), default=0)


def syz_base(M: Matrix) -> Matrix:
    """Matrix whose columns generate the kernel of ``M`` (a reduced Gröbner basis of it)."""
    if not isinstance(M.ring, PolyRing):
        raise ShapeError("syz_base works over a polynomial ring; use syz_local for local rings")
    ring = M.ring
    r, m = M.nrows, M.ncols
    if m == 0:
        return Matrix.zero(ring, 0, 0)
    cols = M.columns()
    shifts = [0] * r + [_column_degree(c) for c in cols]
    order = ModuleOrder(ring, r + m, eliminate=r, shifts=shifts)
    one = ring.field.one
    vecs = []
    for j, c in enumerate(cols):
        v = vector_from_column(c)
        v[(r + j, ring.zero_exp)] = one
        vecs.append(v)
    G = buchberger(vecs, order, reduce_tails=False)
    key = order.key
    syz = [v for v, lt in zip(G.elements, G.leads) if lt[0] >= r]
    syz = interreduce(syz, order)
    syz.sort(key=lambda v: key(max(v, key=key)), reverse=True)
    columns = [column_from_vector(ring, v, m, offset=r) for v in syz]
    return Matrix.from_columns(ring, columns, m)


def modulo_base(f: Matrix, g: Matrix) -> Matrix:
    """Columns generating f^{-1}(Im g)."""
    if f.nrows != g.nrows:
        raise ShapeError(f"modulo needs a common target: {f.shape} vs {g.shape}")
    if f.ring != g.ring:
        raise ShapeError("modulo needs matrices over one ring")
    s = syz_base(f.hstack(g))
    if s.ncols == 0:
        return Matrix.zero(f.ring, f.ncols, 0)
    return s.submatrix(rows=range(f.ncols)).nonzero_columns()


def resolve_base(pres: Matrix, minimize: bool = True):
    """Free resolution F_0 <- F_1 <- ... with d_1 = ``pres`` by iterated syzygies.

    With ``minimize`` each new differential is pruned of constant entries
    against its predecessor, which gives the minimal resolution for graded
    input and keeps inhomogeneous resolutions short.
    """
    from .complex import ChainComplex, prune_diff_list

    ring = pres.ring
    # Iterated Gröbner syzygies of inhomogeneous input may run past nvars + 1
    # steps before the kernel vanishes; the guard only catches runaway loops.
    guard = 4 * (ring.nvars + 1)
    mats = [pres.mutable()]
    if minimize:
        prune_diff_list(mats, 0)
    while True:
        nxt = syz_base(mats[-1].frozen())
        if nxt.ncols == 0:
            break
        mats.append(nxt.mutable())
        if minimize:
            prune_diff_list(mats, len(mats) - 1)
        if mats[-1].ncols == 0:
            mats.pop()
            break
        if len(mats) > guard:
            raise AssertionError(f"resolution longer than {guard}: engine bug")
    if mats and mats[-1].ncols == 0 and len(mats) > 1:
        mats.pop()
    return ChainComplex(ring, [m.frozen() for m in mats], rank0=pres.nrows if not mats else None)


def ideal_contains(G: GroebnerBasis, f: Polynomial) -> bool:
    return G.contains(vector_from_column([f]))
