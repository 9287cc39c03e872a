"""Exact coefficient fields: prime fields GF(p) and the rationals.

Polynomials store raw coefficients (``int`` in ``[0, p)`` for GF(p),
``gmpy2.mpq`` for QQ, falling back to :class:`fractions.Fraction`) and call the field's methods directly;
:class:`FieldElem` is the boxed value used at the public surface.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _rational
    import gmpy2 as _gmpy2
    _RATIONAL_TYPES = (Fraction, type(_rational(0)))
except ImportError:  # pragma: no cover - gmpy2 is optional
    _rational = Fraction
    _gmpy2 = None
    _RATIONAL_TYPES = (Fraction,)

# plain numbers accepted wherever a field element is expected
NUMBER_TYPES = (int,) + _RATIONAL_TYPES


class FieldMismatchError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field ZZ/p for a prime ``p < 2**31``."""

    def __init__(self, p: int = 32003):
        if not isinstance(p, int) or p >= 2**31 or not _is_prime(p):
            raise ValueError(f"characteristic must be a prime below 2^31, got {p!r}")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"ZZ/{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, value) -> "FieldElem":
        return FieldElem(self, self.convert(value))

    def convert(self, value):
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatchError(f"{value.field} element used in {self}")
            return value.value
        if isinstance(value, _RATIONAL_TYPES):
            return int(value.numerator) % self.p * self.inv(int(value.denominator) % self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def render(self, a) -> str:
        # symmetric representative reads better: -1 rather than 32002
        return str(a - self.p if a > self.p // 2 else a)

    def signed(self, a) -> int:
        return a - self.p if a > self.p // 2 else a


class RationalField:
    """QQ with arbitrary-precision numerators and denominators."""

    characteristic = 0
    zero = _rational(0)
    one = _rational(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __call__(self, value) -> "FieldElem":
        return FieldElem(self, self.convert(value))

    def convert(self, value):
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatchError(f"{value.field} element used in {self}")
            return value.value
        return _rational(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / a

    def div(self, a, b):
        return a * self.inv(b)

    def render(self, a) -> str:
        return str(a)

    def signed(self, a):
        return a


QQ = RationalField()


def GF(p: int = 32003) -> PrimeField:
    return PrimeField(p)


class FieldElem:
    """An immutable element of a coefficient field."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other.value
        if isinstance(other, NUMBER_TYPES):
            return self.field.convert(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def inv(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, NUMBER_TYPES):
            return self.value == self.field.convert(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field.render(self.value)} in {self.field}"

    def __str__(self):
        return self.field.render(self.value)
