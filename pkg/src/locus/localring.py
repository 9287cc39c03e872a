"""Localization R_P of a polynomial ring at a prime ideal P.

Elements are fractions num/den with den outside P. Fractions are never
GCD-reduced (that would need multivariate GCD); equality is decided by
cross-multiplication and units by reducing the numerator modulo a Gröbner
basis of P.
"""

from __future__ import annotations

from typing import List, Sequence

from .coeff import NUMBER_TYPES, FieldElem
from .groebner import groebner_ideal, ideal_contains
from .matrix import Matrix, ShapeError
from .poly import PolyRing, Polynomial, RingMismatchError


class UnitIdealError(ValueError):
    pass


class LocalRing:
    """R_P for a polynomial ring R and a prime P, given by generators.

    Primality of P is the caller's responsibility; only properness is checked.
    """

    def __init__(self, base: PolyRing, prime: Sequence[Polynomial], name: str = None):
        prime = [base(f) for f in prime]
        if not prime:
            raise ValueError("the localizing ideal needs at least one generator")
        self.base = base
        self.prime = prime
        self.prime_gb = groebner_ideal(prime)
        if ideal_contains(self.prime_gb, base.one()):
            raise UnitIdealError("cannot localize at the unit ideal")
        self.name = name
        self._unit_cache = {}
        self._gb_key = tuple(sorted(str(g) for g in self.prime_gb.polys()))

    @property
    def field(self):
        return self.base.field

    @property
    def varnames(self):
        return self.base.varnames

    @property
    def nvars(self):
        return self.base.nvars

    def __repr__(self):
        return self.name or f"{self.base}_({', '.join(str(g) for g in self.prime)})"

    def __eq__(self, other):
        return isinstance(other, LocalRing) and self.base == other.base and self._gb_key == other._gb_key

    def __hash__(self):
        return hash((self.base, self._gb_key))

    # elements

    def zero(self) -> "Fraction":
        return Fraction(self, self.base.zero(), self.base.one(), _normalized=True)

    def one(self) -> "Fraction":
        return Fraction(self, self.base.one(), self.base.one(), _normalized=True)

    def gens(self) -> List["Fraction"]:
        return [self.promote(x) for x in self.base.gens()]

    def maximal_ideal_gens(self) -> List["Fraction"]:
        return [self.promote(f) for f in self.prime]

    def __call__(self, value) -> "Fraction":
        if isinstance(value, Fraction):
            if value.ring is not self and value.ring != self:
                raise RingMismatchError(f"element of {value.ring} used in {self}")
            return value
        if isinstance(value, Polynomial):
            return self.promote(value)
        if isinstance(value, NUMBER_TYPES + (FieldElem,)):
            return self.promote(self.base.constant(value))
        raise TypeError(f"cannot make an element of {self} from {value!r}")

    def fraction(self, num: Polynomial, den: Polynomial) -> "Fraction":
        num, den = self.base(num), self.base(den)
        if self.in_prime(den):
            raise ZeroDivisionError(f"denominator {den} lies in the prime ideal")
        return Fraction(self, num, den)

    def in_prime(self, f: Polynomial) -> bool:
        try:
            return self._unit_cache[f]
        except KeyError:
            r = self._unit_cache[f] = ideal_contains(self.prime_gb, f)
            return r

    def is_unit(self, a) -> bool:
        a = self(a)
        return bool(a.num) and not self.in_prime(a.num)

    def unit_inverse(self, a) -> "Fraction":
        a = self(a)
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{a} is not a unit in {self}")
        return Fraction(self, a.den, a.num)

    def promote(self, obj):
        """Image under R -> R_P, r -> r/1, of a polynomial or a matrix."""
        if isinstance(obj, Polynomial):
            if obj.ring != self.base:
                raise RingMismatchError(f"cannot promote an element of {obj.ring} to {self}")
            return Fraction(self, obj, self.base.one(), _normalized=True)
        if isinstance(obj, Matrix):
            if obj.ring == self:
                return obj
            if obj.ring != self.base:
                raise RingMismatchError(f"cannot promote a matrix over {obj.ring} to {self}")
            one = self.base.one()
            return Matrix._raw(self, [[Fraction(self, e, one, _normalized=True) for e in r] for r in obj.entries],
                               obj.nrows, obj.ncols)
        if isinstance(obj, NUMBER_TYPES + (FieldElem,)):
            return self(obj)
        raise TypeError(f"cannot promote {obj!r}")


class Fraction:
    """num/den in R_P; den is monic and outside P, and 0 is stored as 0/1."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, ring: LocalRing, num: Polynomial, den: Polynomial, _normalized: bool = False):
        self.ring = ring
        if _normalized:
            self.num, self.den = num, den
            return
        if not den:
            raise ZeroDivisionError("zero denominator")
        F = ring.base.field
        if not num:
            self.num, self.den = num, ring.base.one()
            return
        if den.is_constant():
            self.num, self.den = num.scale(F.inv(den.constant_coeff())), ring.base.one()
            return
        lc = den.lead_coeff()
        if lc != F.one:
            inv = F.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        q = num.divexact(den) if len(num.terms_dict) >= len(den.terms_dict) else None
        if q is not None:
            self.num, self.den = q, ring.base.one()
        else:
            self.num, self.den = num, den

    def _coerce(self, other):
        if isinstance(other, Fraction):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other
        if isinstance(other, (Polynomial, FieldElem) + NUMBER_TYPES):
            return self.ring(other)
        return NotImplemented

    def _den_is_one(self):
        return self.den.is_constant()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return Fraction(self.ring, self.num + other.num, self.den)
        if other._den_is_one():
            return Fraction(self.ring, self.num + other.num * self.den, self.den)
        if self._den_is_one():
            return Fraction(self.ring, self.num * other.den + other.num, other.den)
        return Fraction(self.ring, self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Fraction(self.ring, -self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return self.ring.zero()
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == c:
            return Fraction(self.ring, a, d)
        if a == d:
            return Fraction(self.ring, c, b)
        if b.is_constant():
            return Fraction(self.ring, a * c, d)
        if d.is_constant():
            return Fraction(self.ring, a * c, b)
        return Fraction(self.ring, a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * self.ring.unit_inverse(other)

    def __pow__(self, n: int):
        if n < 0:
            return self.ring.unit_inverse(self) ** (-n)
        return Fraction(self.ring, self.num ** n, self.den ** n)

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other):
        if isinstance(other, (Fraction, Polynomial, FieldElem) + NUMBER_TYPES):
            try:
                other = self._coerce(other)
            except RingMismatchError:
                return False
            return self.num * other.den == other.num * self.den
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"Fraction({self})"

    def __str__(self):
        return self._render(False)

    def compact(self) -> str:
        return self._render(True)

    def _render(self, compact):
        n = self.num.compact() if compact else str(self.num)
        if self.den.is_constant():
            return n
        d = self.den.compact() if compact else str(self.den)
        if len(self.num.terms_dict) > 1:
            n = f"({n})"
        if len(self.den.terms_dict) > 1 or (not compact and "*" in d):
            d = f"({d})"
        return f"{n}/{d}"


def frac_eq(a: Fraction, b: Fraction) -> bool:
    return a == b


def is_unit(a: Fraction) -> bool:
    return a.ring.is_unit(a)


def promote(obj, RP: LocalRing):
    from .modules import Ideal

    if isinstance(obj, Ideal):
        return obj.promote(RP)
    return RP.promote(obj)


def lift_up_matrix(MP: Matrix, with_multipliers: bool = False):
    """Clear denominators column by column and read off numerators over the base ring.

    Each column is multiplied by the product of its distinct denominators,
    a common multiple that is itself a unit, so column spans agree over R_P.
    With ``with_multipliers`` also returns the per-column multipliers.
    """
    RP = MP.ring
    if isinstance(RP, PolyRing):
        return (MP, [RP.one()] * MP.ncols) if with_multipliers else MP
    if not isinstance(RP, LocalRing):
        raise ShapeError(f"liftUp needs a matrix over a local ring, not {RP}")
    base = RP.base
    one = base.one()
    cols = []
    mults = []
    for col in MP.columns():
        dens: List[Polynomial] = []
        for e in col:
            if e.num and not e.den.is_constant() and e.den not in dens:
                dens.append(e.den)
        common = one
        for d in dens:
            common = common * d
        new = []
        for e in col:
            if not e.num:
                new.append(base.zero())
            elif e.den.is_constant():
                new.append(e.num * common)
            else:
                k = dens.index(e.den)
                other = one
                for m, d in enumerate(dens):
                    if m != k:
                        other = other * d
                new.append(e.num * other)
        cols.append(new)
        mults.append(common)
    M = Matrix.from_columns(base, cols, MP.nrows)
    return (M, mults) if with_multipliers else M


def lift_up(obj):
    """liftUp of a local matrix, ideal, or module."""
    from .modules import Ideal, Module

    if isinstance(obj, Matrix):
        return lift_up_matrix(obj)
    if isinstance(obj, Ideal):
        return obj.lift_up()
    if isinstance(obj, Module):
        return obj.lift_up()
    if isinstance(obj, Fraction):
        return obj.num
    raise TypeError(f"cannot lift {obj!r}")
