"""Ideals and finitely generated modules over R or R_P, and the local pipelines.

Every local computation follows the same route: lift the data to the base
polynomial ring, compute syzygies there, promote the result back to R_P and
prune units out of the differentials.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .complex import (PruningMap, _Tracker, prune_complex, prune_diff_list,
                      tensor_to_local)
from .groebner import (groebner_ideal, groebner_module, ideal_contains, modulo_base,
                       resolve_base, syz_base, vector_from_column)
from .localring import LocalRing, lift_up_matrix
from .matrix import Matrix, ShapeError
from .poly import PolyRing


def _is_local(ring) -> bool:
    return isinstance(ring, LocalRing)


def _base(ring) -> PolyRing:
    return ring.base if _is_local(ring) else ring


def _promote(M: Matrix, ring) -> Matrix:
    return ring.promote(M) if _is_local(ring) else M


def _scale_rows(M: Matrix, mults) -> Matrix:
    """diag(mults) @ M"""
    rows = []
    for r, d in zip(M.entries, mults):
        rows.append(r if d == 1 else [d * x for x in r])
    return Matrix._raw(M.ring, rows, M.nrows, M.ncols)


# ------------------------------------------------------------------ ideals

class Ideal:
    """An ideal given by generators, over a polynomial ring or a local ring."""

    def __init__(self, ring, gens: Sequence):
        self.ring = ring
        self.gens = [ring(g) for g in gens]

    @classmethod
    def of(cls, *gens):
        if not gens:
            raise ValueError("Ideal.of needs at least one generator")
        return cls(gens[0].ring, gens)

    def __len__(self):
        return len(self.gens)

    def matrix(self) -> Matrix:
        return Matrix._raw(self.ring, [list(self.gens)], 1, len(self.gens))

    def _check(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise ShapeError("ideal operation needs ideals of one ring")

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, _dedupe([a * b for a in self.gens for b in other.gens]))

    def __pow__(self, n: int) -> "Ideal":
        if n < 0:
            raise ValueError("ideal powers need n >= 0")
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(n):
            out = out * self
        return out

    def promote(self, RP: LocalRing) -> "Ideal":
        return Ideal(RP, [RP.promote(g) for g in self.gens])

    def lift_up(self) -> "Ideal":
        if not _is_local(self.ring):
            return self
        M = lift_up_matrix(self.matrix())
        return Ideal(self.ring.base, M.entries[0])

    def gb(self):
        if _is_local(self.ring):
            raise ValueError("Gröbner bases are computed over the base ring; lift the ideal first")
        gens = [g for g in self.gens if g] or [self.ring.zero()]
        return groebner_ideal(gens)

    def contains(self, f) -> bool:
        if _is_local(self.ring):
            return local_span_contains(self.matrix(), [self.ring(f)])
        return ideal_contains(self.gb(), self.ring(f))

    def is_subset(self, other: "Ideal") -> bool:
        self._check(other)
        if _is_local(self.ring):
            return all(other.contains(g) for g in self.gens)
        G = other.gb()
        return all(ideal_contains(G, g) for g in self.gens)

    def equals(self, other: "Ideal") -> bool:
        return self.is_subset(other) and other.is_subset(self)

    def module(self) -> "Module":
        return Module.image(self.matrix())

    def quotient_module(self) -> "Module":
        """R^1 / I as a cokernel."""
        return Module.coker(self.matrix())

    def __str__(self):
        body = ", ".join(str(g) for g in self.gens)
        return f"ideal ({body})" if len(self.gens) != 1 else f"ideal {body}"

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"


def _dedupe(elems):
    out = []
    for e in elems:
        if e and not any(e == f for f in out):
            out.append(e)
    return out


# ----------------------------------------------------------------- modules

class Module:
    """(Im gens + Im rels) / Im rels inside a free module of rank ``ambient``."""

    def __init__(self, ring, gens: Matrix, rels: Matrix):
        if gens.nrows != rels.nrows:
            raise ShapeError("generators and relations must share a target")
        if gens.ring != ring or rels.ring != ring:
            raise ShapeError("module data over the wrong ring")
        self.ring = ring
        self.gens = gens
        self.rels = rels
        self.pruning_map: Optional[Matrix] = None
        self.pruning_data: Optional[PruningMap] = None

    # constructors

    @classmethod
    def free(cls, ring, n: int) -> "Module":
        return cls(ring, Matrix.identity(ring, n), Matrix.zero(ring, n, 0))

    @classmethod
    def image(cls, f: Matrix) -> "Module":
        return cls(f.ring, f, Matrix.zero(f.ring, f.nrows, 0))

    @classmethod
    def coker(cls, f: Matrix) -> "Module":
        return cls(f.ring, Matrix.identity(f.ring, f.nrows), f)

    @classmethod
    def subquotient(cls, g: Matrix, h: Matrix) -> "Module":
        return cls(g.ring, g, h)

    # structure

    @property
    def ambient(self) -> int:
        return self.gens.nrows

    @property
    def num_gens(self) -> int:
        return self.gens.ncols

    def _identity_gens(self) -> bool:
        g = self.gens
        if g.nrows != g.ncols:
            return False
        one = self.ring.one()
        return all((x == one) if i == j else not x for i, r in enumerate(g.entries) for j, x in enumerate(r))

    @property
    def kind(self) -> str:
        ident = self._identity_gens()
        norels = self.rels.ncols == 0 or self.rels.is_zero()
        if ident and norels:
            return "free"
        if norels:
            return "image"
        if ident:
            return "cokernel"
        return "subquotient"

    def is_zero_module(self) -> bool:
        return self.num_gens == 0 or mingens(self).ncols == 0

    # operations

    def quotient(self, I: Ideal) -> "Module":
        """M / I·M"""
        if I.ring != self.ring:
            raise ShapeError("ideal and module live over different rings")
        extra = [[g * x for x in col] for col in self.gens.columns() for g in I.gens]
        extra = Matrix.from_columns(self.ring, extra, self.ambient)
        return Module(self.ring, self.gens, self.rels.hstack(extra))

    def ideal_times(self, I) -> "Module":
        """I·M for an ideal (or a list of ring elements)."""
        elems = I.gens if isinstance(I, Ideal) else list(I)
        cols = _product_columns(elems, self.gens)
        return Module(self.ring, Matrix.from_columns(self.ring, cols, self.ambient), self.rels)

    def lift_up(self) -> "Module":
        if not _is_local(self.ring):
            return self
        base = self.ring.base
        return Module(base, lift_up_matrix(self.gens), lift_up_matrix(self.rels))

    def promote(self, RP: LocalRing) -> "Module":
        return Module(RP, RP.promote(self.gens), RP.promote(self.rels))

    def presentation(self) -> Matrix:
        """A matrix whose cokernel is isomorphic to this module, in terms of its generators."""
        kind = self.kind
        if kind == "free":
            return Matrix.zero(self.ring, self.ambient, 0)
        if kind == "cokernel":
            return self.rels
        return _gens_presentation(self)[0]

    def __str__(self):
        return render_module(self)

    def __repr__(self):
        return f"Module({self.kind}, {self.ring})"


def _product_columns(elems, gens: Matrix) -> List[list]:
    cols = []
    keys = set()
    for col in gens.columns():
        for a in elems:
            new = [a * x for x in col]
            if not any(new):
                continue
            k = _column_key(new)
            if k is not None:
                if k in keys:
                    continue
                keys.add(k)
            cols.append(new)
    return cols


def _column_key(col):
    """Hashable identity for a column when every entry has trivial denominator."""
    out = []
    for x in col:
        if hasattr(x, "den"):
            if not x.den.is_constant():
                return None
            out.append(x.num)
        else:
            out.append(x)
    return tuple(out)


def _gens_presentation(M: Module):
    """(presentation over M.ring w.r.t. M's generators, its base-ring version).

    The base version is the syzygy-side matrix computed from the lifted data;
    the ring version rescales its rows by the unit multipliers liftUp used.
    """
    ring = M.ring
    kind = M.kind
    base = _base(ring)
    if kind == "free":
        z = Matrix.zero(base, M.ambient, 0)
        return _promote(z, ring), z
    if kind == "cokernel":
        hb = lift_up_matrix(M.rels)
        return _promote(hb, ring), hb
    gens, mults = lift_up_matrix(M.gens, with_multipliers=True)
    if kind == "image":
        hb = syz_base(gens)
    else:
        hb = modulo_base(gens, lift_up_matrix(M.rels))
    hb = _scale_rows(hb, mults)
    return _promote(hb, ring), hb


# ------------------------------------------------------------- pipelines

def presentation(M: Module) -> Matrix:
    return M.presentation()


def syz(M: Matrix) -> Matrix:
    """First syzygies: over R directly, over R_P by lift, two syzygy steps, promote and prune."""
    ring = M.ring
    if not _is_local(ring):
        return syz_base(M)
    return syz_local(M)


def syz_local(M: Matrix) -> Matrix:
    RP = M.ring
    f, mults = lift_up_matrix(M, with_multipliers=True)
    g = syz_base(f)
    if g.ncols == 0:
        return Matrix.zero(RP, M.ncols, 0)
    h = syz_base(g)
    mats = [RP.promote(_scale_rows(g, mults)).mutable(), RP.promote(h).mutable()]
    prune_diff_list(mats, 1)
    return mats[0].frozen()


def mingens(M: Module) -> Matrix:
    """A minimal generating set chosen among the module's generators."""
    if M.kind == "free" or M.num_gens == 0:
        return M.gens
    h, _ = _gens_presentation(M)
    mats = [M.gens.mutable(), h.mutable()]
    prune_diff_list(mats, 1)
    return mats[0].frozen()


def trim(M: Module) -> Module:
    """Same module with a minimal set of generators."""
    return Module(M.ring, mingens(M), M.rels)


def minimal_presentation(M: Module) -> Module:
    """N ≅ M as the cokernel of a unit-free matrix; N.pruning_map sends N's generators into M's ambient module."""
    ring = M.ring
    if M.kind == "free":
        N = Module.free(ring, M.ambient)
        N.pruning_map = M.gens
        return N
    h, hb = _gens_presentation(M)
    e = syz_base(hb) if hb.ncols else Matrix.zero(hb.ring, 0, 0)
    mats = [M.gens.mutable(), h.mutable(), _promote(e, ring).mutable()]
    ranks = [M.ambient, M.num_gens, h.ncols, e.ncols]
    tracker = _Tracker(ring, ranks, True)
    while prune_diff_list(mats, 1, tracker) + prune_diff_list(mats, 2, tracker):
        pass
    pres = mats[1].frozen()
    N = Module.coker(pres)
    N.pruning_map = mats[0].frozen()
    N.pruning_data = tracker.pruning_map(ranks)
    return N


def resolution(M: Module):
    """Minimal free resolution of M; returns (complex, pruning map)."""
    ring = M.ring
    _, hb = _gens_presentation(M)
    C = resolve_base(hb)
    if _is_local(ring):
        C = tensor_to_local(C, ring)
    return prune_complex(C)


def resolution_local(M: Module):
    if not _is_local(M.ring):
        raise ShapeError("resolution_local needs a module over a local ring")
    return resolution(M)


def local_span_contains(cols: Matrix, v: Sequence) -> bool:
    """Is the column ``v`` in the R_P-span of the columns of ``cols``?

    v lies in the span iff the ideal {c in R : c·v' in Im cols'} of the lifted
    data is not contained in P.
    """
    ring = cols.ring
    col = Matrix.from_columns(ring, [list(v)], cols.nrows)
    if not any(col.entries[i][0] for i in range(cols.nrows)):
        return True
    vb = lift_up_matrix(col)
    if not _is_local(ring):
        if cols.ncols == 0:
            return False
        G = groebner_module(cols)
        return not G.normal_form(vector_from_column(vb.column(0)))
    if cols.ncols == 0:
        return False
    cb = lift_up_matrix(cols)
    colon = modulo_base(vb, cb)
    return any(not ring.in_prime(c) for c in colon.entries[0]) if colon.ncols else False


# --------------------------------------------------------------- rendering

def _ring_label(ring) -> str:
    if _is_local(ring):
        return ring.name or "RP"
    return getattr(ring, "name", None) or "R"


def render_module(M: Module) -> str:
    from .matrix import render_matrix

    kind = M.kind
    label = _ring_label(M.ring)
    if kind == "free":
        return f"{label}^{M.ambient}"
    if kind == "cokernel":
        return _prefixed("cokernel ", render_matrix(M.rels))
    if kind == "image":
        return _prefixed("image ", render_matrix(M.gens))
    return _prefixed("subquotient (", render_matrix(M.gens)) + ",\n" + _prefixed("             ",
                                                                                render_matrix(M.rels)) + ")"


def _prefixed(prefix: str, block: str) -> str:
    lines = block.split("\n")
    pad = " " * len(prefix)
    return "\n".join((prefix if k == 0 else pad) + line for k, line in enumerate(lines))
