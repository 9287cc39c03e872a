"""Length and the Hilbert–Samuel function of modules over R_P."""

from __future__ import annotations

from typing import List, Sequence

from .localring import LocalRing
from .matrix import Matrix, ShapeError
from .modules import Ideal, Module, _product_columns, mingens

DEFAULT_CAP = 100


class LengthCapExceeded(RuntimeError):
    """The m-adic filtration did not reach zero within the iteration cap."""

    def __init__(self, cap: int, partial: int):
        super().__init__(f"length may be infinite: m^i M still nonzero after {cap} steps "
                         f"(partial sum {partial})")
        self.cap = cap
        self.partial = partial


def _require_local(M: Module) -> LocalRing:
    if not isinstance(M.ring, LocalRing):
        raise ShapeError("length and Hilbert–Samuel values are computed over a local ring")
    return M.ring


def _times(elems, M: Module) -> Module:
    cols = _product_columns(elems, M.gens)
    return Module(M.ring, Matrix.from_columns(M.ring, cols, M.ambient), M.rels)


def length_of(M: Module, cap: int = DEFAULT_CAP) -> int:
    """Sum of the minimal generator counts of m^i M until one vanishes."""
    RP = _require_local(M)
    if cap <= 0:
        raise ValueError("the iteration cap must be positive")
    m = RP.maximal_ideal_gens()
    total = 0
    N = M
    for _ in range(cap):
        g = mingens(N)
        n = g.ncols
        if n == 0:
            return total
        total += n
        N = _times(m, Module(RP, g, N.rels))
    raise LengthCapExceeded(cap, total)


def length_steps(M: Module, cap: int = DEFAULT_CAP) -> List[int]:
    """The per-step generator counts summed by :func:`length_of`."""
    RP = _require_local(M)
    m = RP.maximal_ideal_gens()
    out = []
    N = M
    for _ in range(cap):
        g = mingens(N)
        if g.ncols == 0:
            return out
        out.append(g.ncols)
        N = _times(m, Module(RP, g, N.rels))
    raise LengthCapExceeded(cap, sum(out))


def power_times(q: Sequence, M: Module, n: int) -> Module:
    """q^n M with generators re-minimized after every multiplication."""
    N = Module(M.ring, mingens(M), M.rels)
    for _ in range(n):
        N = _times(q, N)
        N = Module(M.ring, mingens(N), N.rels)
    return N


def is_maximal_ideal(q: Ideal, RP: LocalRing) -> bool:
    """Does q equal P R_P? Decided by mutual membership of lifted generators over R."""
    lifted = q.lift_up() if q.ring == RP else q
    P = Ideal(RP.base, RP.prime)
    return lifted.equals(P)


def _parameter_gens(q, RP: LocalRing) -> Ideal:
    if isinstance(q, Ideal):
        I = q if q.ring == RP else q.promote(RP)
    else:
        I = Ideal(RP, [RP(g) for g in q])
    for g in I.gens:
        if RP.is_unit(g):
            raise ValueError(f"parameter ideal generator {g} is a unit")
    return I


def hilbert_samuel_function(M: Module, n: int, q=None, cap: int = DEFAULT_CAP) -> int:
    """Length of q^n M / q^{n+1} M (q defaults to the maximal ideal)."""
    RP = _require_local(M)
    if n < 0:
        raise ValueError("n must be non-negative")
    if q is None:
        qI = Ideal(RP, RP.maximal_ideal_gens())
        maximal = True
    else:
        qI = _parameter_gens(q, RP)
        maximal = is_maximal_ideal(qI, RP)
    if maximal:
        # Nakayama: length(m^n M / m^{n+1} M) = minimal generator count of m^n M
        return mingens(power_times(qI.gens, M, n)).ncols
    Qn = power_times(qI.gens, M, n)
    Qn1 = _times(qI.gens, Qn)
    quotient = Module(RP, Qn.gens, Qn.rels.hstack(Qn1.gens))
    return length_of(quotient, cap)


def multiplicity_at(I: Ideal, prime: Sequence, cap: int = DEFAULT_CAP) -> int:
    """Length of R_P / I R_P for an ideal I of the base ring."""
    RP = LocalRing(I.ring, prime)
    return length_of(I.promote(RP).quotient_module(), cap)
