"""Multivariate polynomials over an exact field with an explicit monomial order."""

from __future__ import annotations

from operator import add
from typing import Dict, Iterable, Sequence, Tuple

from .coeff import NUMBER_TYPES, FieldElem, PrimeField

Exp = Tuple[int, ...]

ORDERS = ("grevlex", "lex", "glex")
_ORDER_ALIASES = {"grevlex": "grevlex", "lex": "lex", "glex": "glex",
                  "graded-lex": "glex", "gradedlex": "glex", "deglex": "glex"}


class RingMismatchError(ValueError):
    pass


class _KeyCache(dict):
    """exponent tuple -> sort key; keys compare with plain tuple comparison."""

    def __init__(self, order):
        super().__init__()
        self.order = order

    def __missing__(self, e):
        if self.order == "grevlex":
            k = (sum(e),) + tuple(-x for x in reversed(e))
        elif self.order == "glex":
            k = (sum(e),) + e
        else:
            k = e
        self[e] = k
        return k


class MonomialOrder:
    def __init__(self, name: str = "grevlex"):
        try:
            self.name = _ORDER_ALIASES[name.lower()]
        except KeyError:
            raise ValueError(f"unknown monomial order {name!r}; expected one of {ORDERS}") from None
        self.key = _KeyCache(self.name)

    def compare(self, a: Exp, b: Exp) -> int:
        ka, kb = self.key[a], self.key[b]
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


def exp_add(a: Exp, b: Exp) -> Exp:
    return tuple(map(add, a, b))


def exp_divides(a: Exp, b: Exp) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def exp_sub(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: Exp, b: Exp) -> Exp:
    return tuple(x if x > y else y for x, y in zip(a, b))


class PolyRing:
    """k[x_1..x_r] with a fixed monomial order."""

    def __init__(self, field=None, varnames: Sequence[str] = ("x",), order: str = "grevlex"):
        self.field = field if field is not None else PrimeField(32003)
        names = tuple(varnames)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        if len(names) > 64:
            raise ValueError("at most 64 variables are supported")
        self.varnames = names
        self.nvars = len(names)
        self.order = MonomialOrder(order)
        self.okey = self.order.key
        self._zero_exp = (0,) * self.nvars

    def __repr__(self):
        return f"{self.field}[{','.join(self.varnames)}]"

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.varnames == other.varnames and self.order == other.order)

    def __hash__(self):
        return hash((self.field, self.varnames, self.order.name))

    # constructors

    @property
    def zero_exp(self) -> Exp:
        return self._zero_exp

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self._zero_exp: self.field.one})

    def constant(self, c) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial(self, {self._zero_exp: c} if c else {})

    def monomial(self, exp: Exp, c=1) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial(self, {tuple(exp): c} if c else {})

    def gens(self):
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Polynomial(self, {tuple(e): self.field.one}))
        return out

    def var(self, name: str) -> "Polynomial":
        try:
            i = self.varnames.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a variable of {self}") from None
        return self.gens()[i]

    def from_terms(self, terms: Iterable) -> "Polynomial":
        """Build from (exponent, coefficient) pairs; repeated exponents are summed."""
        F = self.field
        d: Dict[Exp, object] = {}
        for e, c in terms:
            e = tuple(e)
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} has wrong length for {self}")
            d[e] = F.add(d.get(e, F.zero), F.convert(c))
        return Polynomial(self, {e: c for e, c in d.items() if c})

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatchError(f"{value.ring} element used in {self}")
            return value
        return self.constant(value)

    def is_unit(self, f: "Polynomial") -> bool:
        return f.is_constant() and bool(f)

    def unit_inverse(self, f: "Polynomial") -> "Polynomial":
        if not self.is_unit(f):
            raise ZeroDivisionError(f"{f} is not a unit in {self}")
        return self.constant(self.field.inv(f.terms_dict[self._zero_exp]))


class Polynomial:
    """Immutable polynomial; ``terms_dict`` maps exponent tuples to nonzero raw coefficients."""

    __slots__ = ("ring", "terms_dict", "_lead", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[Exp, object]):
        self.ring = ring
        self.terms_dict = terms
        self._lead = None
        self._hash = None

    # coercion

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other
        if isinstance(other, NUMBER_TYPES + (FieldElem,)):
            return self.ring.constant(other)
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        d = dict(self.terms_dict)
        for e, c in other.terms_dict.items():
            v = F.add(d.get(e, F.zero), c)
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self.terms_dict.items()})

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
        F = self.ring.field
        a, b = self.terms_dict, other.terms_dict
        if not a or not b:
            return Polynomial(self.ring, {})
        if len(a) < len(b):
            a, b = b, a
        p = F.characteristic
        if len(a) * len(b) > 64:
            return Polynomial(self.ring, _packed_mul(a, b, self.ring.nvars, p, F.zero))
        d: Dict[Exp, object] = {}
        get = d.get
        zero = F.zero
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                d[e] = get(e, zero) + ca * cb
        if p:
            d = {e: c % p for e, c in d.items() if c % p}
        else:
            d = {e: c for e, c in d.items() if c}
        return Polynomial(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        """Multiply by a raw field coefficient."""
        F = self.ring.field
        if not c:
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {e: F.mul(v, c) for e, v in self.terms_dict.items()})

    def mul_term(self, exp: Exp, c) -> "Polynomial":
        F = self.ring.field
        if not c:
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {tuple(map(add, e, exp)): F.mul(v, c)
                                      for e, v in self.terms_dict.items()})

    def monic(self) -> "Polynomial":
        if not self.terms_dict:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    # structure

    def is_zero(self) -> bool:
        return not self.terms_dict

    def __bool__(self):
        return bool(self.terms_dict)

    def is_constant(self) -> bool:
        d = self.terms_dict
        return not d or (len(d) == 1 and self.ring.zero_exp in d)

    def constant_coeff(self):
        return self.terms_dict.get(self.ring.zero_exp, self.ring.field.zero)

    def lead_monomial(self) -> Exp:
        if not self.terms_dict:
            raise ValueError("the zero polynomial has no lead term")
        if self._lead is None:
            self._lead = max(self.terms_dict, key=self.ring.okey.__getitem__)
        return self._lead

    def lead_coeff(self):
        return self.terms_dict[self.lead_monomial()]

    def lead_term(self) -> Tuple[Exp, FieldElem]:
        e = self.lead_monomial()
        return e, FieldElem(self.ring.field, self.terms_dict[e])

    def total_degree(self) -> int:
        if not self.terms_dict:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms_dict)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms_dict}) <= 1

    def terms(self):
        """(exponent, raw coefficient) pairs in descending monomial order."""
        return sorted(self.terms_dict.items(), key=lambda t: self.ring.okey[t[0]], reverse=True)

    def divexact(self, other: "Polynomial"):
        """Quotient if ``other`` divides ``self`` exactly, else None."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return self
        F = self.ring.field
        okey = self.ring.okey
        lm, lc = other.lead_monomial(), other.lead_coeff()
        inv = F.inv(lc)
        if other.is_constant():
            return self.scale(inv)
        rem = dict(self.terms_dict)
        q: Dict[Exp, object] = {}
        while rem:
            e = max(rem, key=okey.__getitem__)
            if not exp_divides(lm, e):
                return None
            m = exp_sub(e, lm)
            c = F.mul(rem[e], inv)
            q[m] = c
            for eo, co in other.terms_dict.items():
                t = tuple(map(add, eo, m))
                v = F.sub(rem.get(t, F.zero), F.mul(c, co))
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Polynomial(self.ring, q)

    # comparison

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms_dict == other.terms_dict
        if isinstance(other, NUMBER_TYPES + (FieldElem,)):
            return self.terms_dict == self.ring.constant(other).terms_dict
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms_dict.items()))
        return self._hash

    # rendering

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return render_poly(self, compact=False)

    def compact(self) -> str:
        return render_poly(self, compact=True)


def _render_monomial(names, e, compact):
    parts = []
    for name, k in zip(names, e):
        if k == 0:
            continue
        if compact:
            parts.append(name if k == 1 else f"{name}{k}")
        else:
            parts.append(name if k == 1 else f"{name}^{k}")
    return ("" if compact else "*").join(parts)


def render_poly(f: Polynomial, compact: bool = False) -> str:
    """``x^3+y^3`` style, or the juxtaposed ``x3+y3`` form when ``compact``."""
    ring = f.ring
    if not f.terms_dict:
        return "0"
    # juxtaposition is only unambiguous with single-letter names
    compact = compact and all(len(n) == 1 for n in ring.varnames)
    F = ring.field
    out = []
    for e, c in f.terms():
        c = F.signed(c)
        mono = _render_monomial(ring.varnames, e, compact)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}{'' if compact else '*'}{mono}"
        if out:
            out.append(("-" if neg else "+") + body)
        else:
            out.append(("-" if neg else "") + body)
    return "".join(out)


_SHIFT = 20


def _packed_mul(a, b, n, p, zero):
    """Product of term dicts with exponents packed into single ints (each slot below 2**_SHIFT)."""
    if max(max(e, default=0) for e in a) + max(max(e, default=0) for e in b) >= 1 << _SHIFT:
        raise OverflowError("exponent too large for packed multiplication")

    def pack(e):
        k = 0
        for x in e:
            k = (k << _SHIFT) | x
        return k

    pa = [(pack(e), c) for e, c in a.items()]
    d = {}
    get = d.get
    for eb, cb in b.items():
        kb = pack(eb)
        for ka, ca in pa:
            k = ka + kb
            d[k] = get(k, zero) + ca * cb
    mask = (1 << _SHIFT) - 1
    out = {}
    for k, c in d.items():
        if p:
            c %= p
        if not c:
            continue
        e = [0] * n
        for i in range(n - 1, -1, -1):
            e[i] = k & mask
            k >>= _SHIFT
        out[tuple(e)] = c
    return out
