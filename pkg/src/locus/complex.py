"""Chain complexes of free modules and unit pruning.

A complex is stored as its differentials d_1, d_2, ... where d_i is an
``rank F_{i-1} x rank F_i`` matrix. The list-level helpers
(:func:`prune_unit_list`, :func:`prune_diff_list`) take a plain list of
matrices indexed from 0, the way the procedures treat "a list of compatible
matrices"; matrix k maps F_{k+1} to F_k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .matrix import Matrix, MutableMatrix, ShapeError


class NotAUnitError(ValueError):
    pass


class NotMinimalError(ValueError):
    pass


@dataclass
class PruningMap:
    """Comparison maps between a complex and its pruned summand.

    ``inclusions[k]`` maps the pruned F_k into the original F_k and
    ``projections[k]`` maps back; ``projections[k] @ inclusions[k]`` is the
    identity and both families commute with the differentials.
    """

    inclusions: List[Matrix]
    projections: List[Matrix]
    eliminated: List[int] = field(default_factory=list)
    labels: List[List[int]] = field(default_factory=list)


class _Tracker:
    def __init__(self, ring, ranks, track_maps):
        self.ring = ring
        self.labels = [list(range(r)) for r in ranks]
        self.eliminated = [0] * len(ranks)
        self.track = track_maps
        if track_maps:
            z, o = ring.zero(), ring.one()
            # incl[k]: rows = original basis, cols = current basis
            self.incl = [[[o if i == j else z for j in range(r)] for i in range(r)] for r in ranks]
            # proj[k]: rows = current basis, cols = original basis
            self.proj = [[[o if i == j else z for j in range(r)] for i in range(r)] for r in ranks]

    def swap(self, k, a, b):
        lab = self.labels[k]
        lab[a], lab[b] = lab[b], lab[a]
        if self.track:
            for row in self.incl[k]:
                row[a], row[b] = row[b], row[a]
            P = self.proj[k]
            P[a], P[b] = P[b], P[a]

    def column_pivot(self, k, b, row_of_pivot, uinv):
        """Degree k loses basis vector b; e'_j = e_j - (r_j/u) e_b."""
        if self.track:
            for orow in self.incl[k]:
                eb = orow[b]
                if eb:
                    for j, r in enumerate(row_of_pivot):
                        if j != b and r:
                            orow[j] = orow[j] - r * uinv * eb
                del orow[b]
            del self.proj[k][b]
        del self.labels[k][b]
        self.eliminated[k] += 1

    def row_pivot(self, k, a, col_of_pivot, uinv):
        """Degree k loses basis vector a; coordinates y'_i = y_i - (c_i/u) y_a."""
        if self.track:
            for orow in self.incl[k]:
                del orow[a]
            P = self.proj[k]
            ra = P[a]
            for i, c in enumerate(col_of_pivot):
                if i != a and c:
                    f = c * uinv
                    P[i] = [x - f * y if y else x for x, y in zip(P[i], ra)]
            del P[a]
        del self.labels[k][a]
        self.eliminated[k] += 1

    def pruning_map(self, original_ranks) -> PruningMap:
        if not self.track:
            return PruningMap([], [], list(self.eliminated), [list(l) for l in self.labels])
        incs, projs = [], []
        for k, r in enumerate(original_ranks):
            cur = len(self.labels[k])
            incs.append(Matrix._raw(self.ring, [list(row) for row in self.incl[k]], r, cur))
            projs.append(Matrix._raw(self.ring, [list(row) for row in self.proj[k]], cur, r))
        return PruningMap(incs, projs, list(self.eliminated), [list(l) for l in self.labels])


def _ranks_of(mats) -> List[int]:
    if not mats:
        return []
    return [mats[0].nrows] + [m.ncols for m in mats]


def _pivot(mats, k, a, b, tracker: Optional[_Tracker]):
    D = mats[k]
    ring = D.ring
    E = D.entries
    u = E[a][b]
    if not ring.is_unit(u):
        raise NotAUnitError(f"entry ({a},{b}) of differential {k} is not a unit: {u}")
    uinv = ring.unit_inverse(u)
    row_a = E[a]
    col_b = [r[b] for r in E]
    if tracker is not None:
        tracker.column_pivot(k + 1, b, list(row_a), uinv)
        tracker.row_pivot(k, a, col_b, uinv)
    nz = [(j, x) for j, x in enumerate(row_a) if j != b and x]
    for i, c in enumerate(col_b):
        if i == a or not c:
            continue
        f = c * uinv
        row = E[i]
        for j, x in nz:
            row[j] = row[j] - f * x
    D.delete_row(a)
    D.delete_col(b)
    if k > 0:
        mats[k - 1].delete_col(a)
    if k + 1 < len(mats):
        mats[k + 1].delete_row(b)


def prune_unit_list(mats: List[MutableMatrix], k: int, row: int = 0, col: int = 0,
                    tracker: Optional[_Tracker] = None):
    """Eliminate the unit at (row, col) of ``mats[k]`` in place.

    Row operations clear the pivot column (the neighbour ``mats[k-1]`` then
    only loses a column) and column operations clear the pivot row (``mats[k+1]``
    only loses a row); the pivot row and column are then deleted.
    """
    _pivot(mats, k, row, col, tracker)


def _find_unit(D: Matrix):
    ring = D.ring
    E = D.entries
    rn = [sum(1 for x in r if x) for r in E]
    cn = [0] * D.ncols
    units = []
    for i, r in enumerate(E):
        for j, x in enumerate(r):
            if x:
                cn[j] += 1
                if ring.is_unit(x):
                    units.append((i, j))
    if not units:
        return None
    return min(units, key=lambda ij: (rn[ij[0]] + cn[ij[1]], ij[0], ij[1]))


def _swap_to_front(mats, k, a, b, tracker):
    D = mats[k]
    if a != 0:
        D.swap_rows(0, a)
        if k > 0:
            mats[k - 1].swap_cols(0, a)
        if tracker is not None:
            tracker.swap(k, 0, a)
    if b != 0:
        D.swap_cols(0, b)
        if k + 1 < len(mats):
            mats[k + 1].swap_rows(0, b)
        if tracker is not None:
            tracker.swap(k + 1, 0, b)


def prune_diff_list(mats: List[MutableMatrix], k: int, tracker: Optional[_Tracker] = None) -> int:
    """Remove every unit from ``mats[k]``; returns the number of eliminations."""
    count = 0
    while True:
        D = mats[k]
        if D.nrows == 0 or D.ncols == 0:
            return count
        found = _find_unit(D)
        if found is None:
            return count
        a, b = found
        _swap_to_front(mats, k, a, b, tracker)
        _pivot(mats, k, 0, 0, tracker)
        count += 1


def prune_complex_list(mats: List[MutableMatrix], tracker: Optional[_Tracker] = None) -> int:
    total = 0
    while True:
        n = 0
        for k in range(len(mats)):
            n += prune_diff_list(mats, k, tracker)
        total += n
        if n == 0:
            return total


class ChainComplex:
    """F_0 <- F_1 <- ... <- F_k given by differentials d_1..d_k."""

    def __init__(self, ring, diffs, rank0: int = None):
        self.ring = ring
        self.diffs: List[Matrix] = [d.frozen() if isinstance(d, MutableMatrix) else d for d in diffs]
        for d in self.diffs:
            if d.ring != ring:
                raise ShapeError("differential over the wrong ring")
        for k in range(1, len(self.diffs)):
            if self.diffs[k].nrows != self.diffs[k - 1].ncols:
                raise ShapeError(f"d_{k} and d_{k + 1} are not composable")
        if self.diffs:
            self._rank0 = self.diffs[0].nrows
        else:
            self._rank0 = rank0 or 0

    def __len__(self):
        return len(self.diffs)

    def d(self, i: int) -> Matrix:
        """The differential d_i : F_i -> F_{i-1}, for i >= 1."""
        return self.diffs[i - 1]

    def ranks(self) -> List[int]:
        return [self._rank0] + [d.ncols for d in self.diffs]

    def is_complex(self) -> bool:
        return all((self.diffs[k] @ self.diffs[k + 1]).is_zero() for k in range(len(self.diffs) - 1))

    def has_units(self) -> bool:
        return any(self.ring.is_unit(x) for d in self.diffs for r in d.entries for x in r if x)

    def mutable_list(self) -> List[MutableMatrix]:
        return [d.mutable() for d in self.diffs]

    def __str__(self):
        return render_ranks(self.ranks())

    def __repr__(self):
        return f"ChainComplex({self} over {self.ring})"


def render_ranks(ranks: List[int]) -> str:
    r = list(ranks)
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return " <-- ".join(str(x) for x in r) if r else "0"


def tensor_to_local(C: ChainComplex, RP) -> ChainComplex:
    """C ⊗_R R_P: promote every differential entrywise."""
    if C.ring != RP.base:
        raise ShapeError(f"complex over {C.ring} cannot be tensored to {RP}")
    return ChainComplex(RP, [RP.promote(d) for d in C.diffs], rank0=C.ranks()[0])


def prune_unit(C: ChainComplex, i: int, row: int = 0, col: int = 0) -> ChainComplex:
    """Eliminate the unit at (row, col) of d_i."""
    mats = C.mutable_list()
    prune_unit_list(mats, i - 1, row, col)
    return _rebuild(C, mats)


def prune_diff(C: ChainComplex, i: int) -> ChainComplex:
    """Remove all units from d_i, moving each chosen unit to the corner first."""
    mats = C.mutable_list()
    prune_diff_list(mats, i - 1)
    return _rebuild(C, mats)


def prune_complex(C: ChainComplex, track: bool = True):
    """Remove the units of every differential; returns (pruned complex, PruningMap)."""
    mats = C.mutable_list()
    ranks = C.ranks()
    tracker = _Tracker(C.ring, ranks, track) if mats else None
    prune_complex_list(mats, tracker)
    pruned = _rebuild(C, mats)
    if tracker is None:
        return pruned, PruningMap([], [], [0], [list(range(ranks[0]))])
    return pruned, tracker.pruning_map(ranks)


def _rebuild(C, mats):
    return ChainComplex(C.ring, [m.frozen() for m in mats], rank0=C.ranks()[0])


def betti_ranks(C: ChainComplex) -> List[int]:
    if C.has_units():
        raise NotMinimalError("complex still has unit entries; prune it first")
    r = C.ranks()
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return r
