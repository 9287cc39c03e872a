"""Evaluation of parsed scripts against a session symbol table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as PyFraction
from typing import Any, Callable, Dict, List, Optional

from ..coeff import NUMBER_TYPES, QQ, FieldElem, PrimeField
from ..complex import (ChainComplex, betti_ranks, prune_complex, prune_diff, prune_diff_list, prune_unit,
                       render_ranks, tensor_to_local)
from ..groebner import groebner_ideal
from ..invariants import DEFAULT_CAP, hilbert_samuel_function, length_of
from ..localring import Fraction, LocalRing, lift_up
from ..matrix import Matrix, render_matrix
from ..modules import Ideal, Module, mingens, minimal_presentation, render_module, resolution, syz, trim
from ..poly import PolyRing, Polynomial
from .ast import (BinOp, Call, ForList, Index, ListLit, Name, Neg, Node, Num, RingLit, Script, Shorthand, Stmt,
                  SVar, render)


class EvalError(Exception):
    """An evaluation failure, tagged with the statement that caused it."""

    def __init__(self, msg: str, stmt: Optional[Stmt] = None):
        self.msg = msg
        self.stmt = stmt
        where = f" in statement `{stmt.source}` (line {stmt.line})" if stmt is not None and stmt.source else ""
        super().__init__(f"{msg}{where}")


class _Raise(Exception):
    """Internal: an evaluation error not yet tagged with its statement."""


@dataclass
class Outcome:
    stmt: Stmt
    value: Any
    text: Optional[str]  # None when nothing is printed

    def record(self) -> Dict[str, Any]:
        rec: Dict[str, Any] = {"line": self.stmt.line, "op": op_name(self.stmt.expr),
                               "inputs": op_inputs(self.stmt.expr), "result": render_value(self.value)}
        if self.stmt.target is not None:
            rec["target"] = self.stmt.target
        if isinstance(self.value, ChainComplex):
            rec["ranks"] = _trimmed_ranks(self.value)
        if isinstance(self.value, list) and all(isinstance(v, int) for v in self.value):
            rec["values"] = list(self.value)
        elif isinstance(self.value, int) and not isinstance(self.value, bool):
            rec["values"] = [self.value]
        return rec


def op_name(e: Node) -> str:
    if isinstance(e, Call):
        return e.func.ident if isinstance(e.func, Name) else "call"
    if isinstance(e, BinOp):
        return e.op
    if isinstance(e, Neg):
        return "neg"
    if isinstance(e, Shorthand):
        return "shorthand"
    if isinstance(e, ForList):
        return "for"
    if isinstance(e, RingLit):
        return "ring"
    if isinstance(e, ListLit):
        return "list"
    if isinstance(e, Index):
        return "#"
    return "value"


def op_inputs(e: Node) -> List[str]:
    if isinstance(e, Call):
        return [render(a) for a in e.args]
    if isinstance(e, BinOp):
        return [render(e.left), render(e.right)]
    if isinstance(e, Neg):
        return [render(e.operand)]
    if isinstance(e, Index):
        return [render(e.target), render(e.index)]
    if isinstance(e, ForList):
        return [render(e.start), render(e.stop), render(e.body)]
    return [render(e)]


def _trimmed_ranks(C: ChainComplex) -> List[int]:
    r = C.ranks()
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return r


def render_value(v) -> Optional[str]:
    if v is None:
        return None
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (Matrix,)):
        return render_matrix(v)
    if isinstance(v, Module):
        return render_module(v)
    if isinstance(v, ChainComplex):
        return render_ranks(v.ranks())
    if isinstance(v, Ideal):
        return str(v)
    if isinstance(v, LocalRing):
        return f"localRing({v.base}, ideal ({', '.join(str(g) for g in v.prime)}))"
    if isinstance(v, list):
        parts = [render_value(x) or "null" for x in v]
        if any("\n" in p for p in parts):
            return "{\n" + ",\n".join("  " + p.replace("\n", "\n  ") for p in parts) + "\n}"
        return "{" + ", ".join(parts) + "}"
    return str(v)


def _letters(a: str, b: str) -> List[str]:
    if len(a) != 1 or len(b) != 1 or not a.isalpha() or not b.isalpha() or ord(a) > ord(b):
        raise _Raise(f"bad variable range {a}..{b}")
    return [chr(c) for c in range(ord(a), ord(b) + 1)]


def _ring_of(values, default):
    for v in values:
        if isinstance(v, (Polynomial, Fraction)):
            return v.ring
    return default


class Interpreter:
    """One session: a symbol table, a current ring, and the configured defaults."""

    def __init__(self, prime: int = 32003, cap: int = DEFAULT_CAP, order: str = "grevlex"):
        self.prime = prime
        self.cap = cap
        self.order = order
        self.symbols: Dict[str, Any] = {}
        self.ring = None
        self.builtins: Dict[str, Callable] = _builtin_table()

    # ---------------------------------------------------------- statements

    def run(self, script: Script):
        """Evaluate statement by statement, yielding an :class:`Outcome` for each."""
        for stmt in script.stmts:
            yield self.execute(stmt)

    def execute(self, stmt: Stmt) -> Outcome:
        try:
            value = self.eval(stmt.expr)
            if stmt.ring_decl and not isinstance(value, (PolyRing, LocalRing)):
                raise _Raise("`ring NAME = ...` needs a ring on the right")
            if stmt.target is not None:
                self.symbols[stmt.target] = value
                if isinstance(value, (PolyRing, LocalRing)) and getattr(value, "name", None) is None:
                    value.name = stmt.target
        except EvalError:
            raise
        except _Raise as e:
            raise EvalError(str(e), stmt) from None
        except RecursionError:
            raise EvalError("expression nested too deeply", stmt) from None
        except (ValueError, ArithmeticError, TypeError, KeyError, IndexError, RuntimeError) as e:
            raise EvalError(str(e) or type(e).__name__, stmt) from None
        text = None if stmt.quiet or value is None else render_value(value)
        return Outcome(stmt, value, text)

    # ---------------------------------------------------------- expressions

    def eval(self, e: Node):
        if isinstance(e, Num):
            return e.value
        if isinstance(e, Name):
            return self.lookup(e.ident)
        if isinstance(e, Shorthand):
            return self.eval_shorthand(e)
        if isinstance(e, SVar):
            return self.shorthand_var(e.ident)
        if isinstance(e, Neg):
            return -self.eval(e.operand)
        if isinstance(e, BinOp):
            return self.binop(e.op, self.eval(e.left), self.eval(e.right))
        if isinstance(e, Call):
            return self.call(e)
        if isinstance(e, Index):
            return self.index(self.eval(e.target), self.eval(e.index))
        if isinstance(e, ListLit):
            return [self.eval(x) for x in e.items]
        if isinstance(e, ForList):
            return self.for_list(e)
        if isinstance(e, RingLit):
            return self.make_ring(e)
        raise _Raise(f"cannot evaluate {type(e).__name__}")

    def lookup(self, name: str):
        if name in self.symbols:
            return self.symbols[name]
        if name in self.builtins:
            return _Builtin(name, self.builtins[name])
        raise _Raise(f"unbound name {name!r}")

    def shorthand_var(self, name: str):
        if self.ring is None:
            raise _Raise("no current ring for polynomial shorthand")
        base = self.ring.base if isinstance(self.ring, LocalRing) else self.ring
        if name not in base.varnames:
            raise _Raise(f"unknown variable {name!r} in shorthand (ring has {', '.join(base.varnames)})")
        x = base.var(name)
        return self.ring.promote(x) if isinstance(self.ring, LocalRing) else x

    def eval_shorthand(self, e: Shorthand):
        if self.ring is None:
            raise _Raise("no current ring for polynomial shorthand")
        return [self.ring(self.eval(g)) for g in e.gens]

    def for_list(self, e: ForList):
        a, b = self.eval(e.start), self.eval(e.stop)
        if not isinstance(a, int) or not isinstance(b, int):
            raise _Raise("loop bounds must be integers")
        saved = self.symbols.get(e.var, _MISSING)
        out = []
        try:
            for i in range(a, b + 1):
                self.symbols[e.var] = i
                out.append(self.eval(e.body))
        finally:
            if saved is _MISSING:
                self.symbols.pop(e.var, None)
            else:
                self.symbols[e.var] = saved
        return out

    def index(self, target, i):
        if not isinstance(i, int):
            raise _Raise("index must be an integer")
        if isinstance(target, list):
            if not 0 <= i < len(target):
                raise _Raise(f"index {i} out of range for a list of length {len(target)}")
            return target[i]
        raise _Raise(f"cannot index a {_kind(target)}")

    def make_ring(self, e: RingLit) -> PolyRing:
        if e.field_name == "QQ":
            field = QQ
        elif e.field_name == "kk":
            field = PrimeField(self.prime)
        else:
            field = PrimeField(e.prime)
        names: List[str] = []
        for spec in e.vars:
            if spec[0] == "name":
                names.append(spec[1])
            elif spec[0] == "range":
                names.extend(_letters(spec[1], spec[2]))
            else:
                lo, hi = spec[1], spec[2]
                if not 0 <= lo <= hi < 26:
                    raise _Raise(f"vars({lo}..{hi}) must lie within 0..25")
                names.extend(chr(ord("a") + k) for k in range(lo, hi + 1))
        R = PolyRing(field, names, e.order or self.order)
        R.name = None
        self.use(R)
        return R

    def use(self, ring):
        if not isinstance(ring, (PolyRing, LocalRing)):
            raise _Raise(f"use needs a ring, not a {_kind(ring)}")
        self.ring = ring
        base = ring.base if isinstance(ring, LocalRing) else ring
        for name, x in zip(base.varnames, base.gens()):
            self.symbols[name] = ring.promote(x) if isinstance(ring, LocalRing) else x

    # ---------------------------------------------------------- operators

    def binop(self, op, a, b):
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            if isinstance(a, Ideal) and isinstance(b, Ideal):
                return a * b
            if isinstance(a, Ideal) and isinstance(b, Module):
                return b.ideal_times(_match_ideal(a, b.ring))
            return a * b
        if op == "/":
            return self.divide(a, b)
        if op == "^":
            return self.power(a, b)
        if op == "**":
            return self.tensor(a, b)
        if op == "==":
            return _equal(a, b)
        if op == "!=":
            return not _equal(a, b)
        raise _Raise(f"unknown operator {op}")

    def divide(self, a, b):
        if isinstance(a, Module):
            if isinstance(b, Ideal):
                return a.quotient(_match_ideal(b, a.ring))
            raise _Raise("a module can only be divided by an ideal")
        if isinstance(a, int) and isinstance(b, int):
            if b == 0:
                raise _Raise("division by zero")
            q = PyFraction(a, b)
            return q.numerator if q.denominator == 1 else q
        if isinstance(a, Polynomial) and isinstance(b, Polynomial):
            q = a.divexact(b)
            if q is None:
                raise _Raise(f"{b} does not divide {a} in {a.ring}; localize first")
            return q
        if isinstance(b, NUMBER_TYPES) and isinstance(a, (Polynomial, Matrix)):
            if b == 0:
                raise _Raise("division by zero")
            field = a.ring.field
            return a * FieldElem(field, field.inv(field.convert(b)))
        return a / b

    def power(self, a, n):
        if isinstance(a, (PolyRing, LocalRing)):
            if not isinstance(n, int) or n < 0:
                raise _Raise("free module rank must be a non-negative integer")
            return Module.free(a, n)
        if not isinstance(n, int):
            raise _Raise("exponent must be an integer")
        if isinstance(a, Ideal):
            return a ** n
        if isinstance(a, int):
            return a ** n if n >= 0 else PyFraction(1, a ** -n)
        if isinstance(a, Polynomial) and n < 0:
            raise _Raise("negative powers need a local ring")
        return a ** n

    def tensor(self, a, RP):
        if not isinstance(RP, LocalRing):
            raise _Raise("`**` tensors with a local ring on the right")
        if isinstance(a, ChainComplex):
            return tensor_to_local(a, RP)
        if isinstance(a, (Matrix, Ideal, Module, Polynomial)):
            return _promote(a, RP)
        if isinstance(a, list):
            return [self.tensor(x, RP) for x in a]
        raise _Raise(f"cannot tensor a {_kind(a)} with a local ring")

    # ---------------------------------------------------------- calls

    def call(self, e: Call):
        f = self.eval(e.func)
        if not isinstance(f, _Builtin):
            raise _Raise(f"{render(e.func)} is a {_kind(f)}, not a function")
        args = [self.eval(a) for a in e.args]
        return f.fn(self, args)


_MISSING = object()


@dataclass
class _Builtin:
    name: str
    fn: Callable

    def __str__(self):
        return f"<function {self.name}>"


def _kind(v) -> str:
    names = {bool: "boolean", int: "integer", list: "list", PolyRing: "ring", LocalRing: "local ring",
             Polynomial: "polynomial", Fraction: "local ring element", Ideal: "ideal", Matrix: "matrix",
             Module: "module", ChainComplex: "complex", _Builtin: "function"}
    for t, n in names.items():
        if isinstance(v, t):
            return n
    return type(v).__name__


def _equal(a, b) -> bool:
    if isinstance(a, Matrix) and isinstance(b, int) and b == 0:
        return a.is_zero()
    if isinstance(b, Matrix) and isinstance(a, int) and a == 0:
        return b.is_zero()
    if isinstance(a, Matrix) and isinstance(b, Matrix):
        return a.shape == b.shape and all(x == y for r, s in zip(a.entries, b.entries) for x, y in zip(r, s))
    if isinstance(a, Ideal) and isinstance(b, Ideal):
        return a.equals(b)
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(_equal(x, y) for x, y in zip(a, b))
    return a == b


def _match_ideal(I: Ideal, ring) -> Ideal:
    if I.ring == ring:
        return I
    if isinstance(ring, LocalRing) and I.ring == ring.base:
        return I.promote(ring)
    raise _Raise(f"ideal over {I.ring} used with a module over {ring}")


def _promote(a, RP: LocalRing):
    if isinstance(a, (Ideal, Module)):
        return a if a.ring == RP else a.promote(RP)
    if isinstance(a, list):
        return [_promote(x, RP) for x in a]
    return RP.promote(a)


def _arity(name, args, *counts):
    if len(args) not in counts:
        want = " or ".join(str(c) for c in counts)
        raise _Raise(f"{name} takes {want} argument{'s' if counts != (1,) else ''}, got {len(args)}")


def _need(name, v, *types):
    if not isinstance(v, types):
        raise _Raise(f"{name}: unexpected {_kind(v)} argument")
    return v


def _as_module(name, v) -> Module:
    if isinstance(v, Module):
        return v
    if isinstance(v, Ideal):
        return v.quotient_module()
    if isinstance(v, Matrix):
        return Module.coker(v)
    raise _Raise(f"{name} needs a module, ideal or matrix, not a {_kind(v)}")


# ------------------------------------------------------------------ builtins

def _b_ideal(it, args):
    if len(args) == 1 and isinstance(args[0], Ideal):
        return args[0]
    if len(args) == 1 and isinstance(args[0], Matrix):
        elems = [x for r in args[0].entries for x in r]
        ring = args[0].ring
    else:
        elems = []
        for a in args:
            elems.extend(a if isinstance(a, list) else [a])
        ring = _ring_of(elems, it.ring)
    if ring is None:
        raise _Raise("ideal needs a current ring")
    if not elems:
        raise _Raise("ideal needs at least one generator")
    for x in elems:
        if not isinstance(x, (Polynomial, Fraction, FieldElem) + NUMBER_TYPES):
            raise _Raise(f"ideal generators must be ring elements, not a {_kind(x)}")
    return Ideal(ring, elems)


def _b_local_ring(it, args):
    _arity("localRing", args, 2)
    R, P = args
    _need("localRing", R, PolyRing)
    gens = P.gens if isinstance(P, Ideal) else P
    if not isinstance(gens, list):
        raise _Raise("localRing needs an ideal or a list of generators")
    return LocalRing(R, [R(g) for g in gens])


def _b_use(it, args):
    _arity("use", args, 1)
    it.use(args[0])
    return None


def _b_promote(it, args):
    _arity("promote", args, 2)
    _need("promote", args[1], LocalRing)
    return _promote(args[0], args[1])


def _b_lift_up(it, args):
    _arity("liftUp", args, 1)
    return lift_up(args[0])


def _b_res(it, args):
    _arity("res", args, 1)
    return resolution(_as_module("res", args[0]))[0]


def _b_prune(it, args):
    _arity("prune", args, 1)
    v = args[0]
    if isinstance(v, ChainComplex):
        return prune_complex(v)[0]
    if isinstance(v, Module):
        return minimal_presentation(v)
    raise _Raise(f"prune needs a complex or a module, not a {_kind(v)}")


def _b_prune_complex(it, args):
    _arity("pruneComplex", args, 1)
    return prune_complex(_need("pruneComplex", args[0], ChainComplex))[0]


def _b_prune_diff(it, args):
    _arity("pruneDiff", args, 2)
    C, i = args
    _need("pruneDiff", i, int)
    if isinstance(C, ChainComplex):
        if not 1 <= i <= len(C):
            raise _Raise(f"pruneDiff: differential index {i} out of range 1..{len(C)}")
        return prune_diff(C, i)
    if isinstance(C, list) and all(isinstance(m, Matrix) for m in C):
        if not 1 <= i <= len(C):
            raise _Raise(f"pruneDiff: differential index {i} out of range 1..{len(C)}")
        mats = [m.mutable() for m in C]
        prune_diff_list(mats, i - 1)
        return [m.frozen() for m in mats]
    raise _Raise("pruneDiff needs a complex or a list of matrices")


def _b_prune_unit(it, args):
    _arity("pruneUnit", args, 4)
    C, i, r, c = args
    _need("pruneUnit", C, ChainComplex)
    for v in (i, r, c):
        _need("pruneUnit", v, int)
    if not 1 <= i <= len(C):
        raise _Raise(f"pruneUnit: differential index {i} out of range")
    return prune_unit(C, i, r, c)


def _b_syz(it, args):
    _arity("syz", args, 1)
    v = args[0]
    if isinstance(v, Ideal):
        v = v.matrix()
    return syz(_need("syz", v, Matrix))


def _b_mingens(it, args):
    _arity("mingens", args, 1)
    v = args[0]
    if isinstance(v, Ideal):
        return mingens(v.module())
    return mingens(_need("mingens", v, Module))


def _b_trim(it, args):
    _arity("trim", args, 1)
    v = args[0]
    if isinstance(v, Ideal):
        g = mingens(v.module())
        return Ideal(v.ring, g.entries[0] if g.nrows else [])
    return trim(_need("trim", v, Module))


def _b_minpres(it, args):
    _arity("minimalPresentation", args, 1)
    return minimal_presentation(_as_module("minimalPresentation", args[0]))


def _b_length(it, args):
    _arity("length", args, 1)
    v = args[0]
    if isinstance(v, list):
        return len(v)
    M = _need("length", v, Module)
    return length_of(M, it.cap)


def _b_hsf(it, args):
    _arity("hilbertSamuelFunction", args, 2, 3)
    if len(args) == 2:
        q, (M, n) = None, args
    else:
        q, M, n = args
    _need("hilbertSamuelFunction", M, Module)
    _need("hilbertSamuelFunction", n, int)
    if q is not None:
        q = _need("hilbertSamuelFunction", q, Ideal, list)
        if isinstance(q, Ideal) and q.ring != M.ring:
            q = _match_ideal(q, M.ring)
    return hilbert_samuel_function(M, n, q, it.cap)


def _b_betti(it, args):
    _arity("betti", args, 1)
    v = args[0]
    if isinstance(v, ChainComplex):
        return betti_ranks(v)
    return betti_ranks(resolution(_as_module("betti", v))[0])


def _b_ranks(it, args):
    _arity("ranks", args, 1)
    return _trimmed_ranks(_need("ranks", args[0], ChainComplex))


def _b_dd(it, args):
    _arity("dd", args, 2)
    C, i = args
    _need("dd", C, ChainComplex)
    _need("dd", i, int)
    if not 1 <= i <= len(C):
        raise _Raise(f"dd: index {i} out of range 1..{len(C)}")
    return C.d(i)


def _b_is_complex(it, args):
    _arity("isComplex", args, 1)
    return _need("isComplex", args[0], ChainComplex).is_complex()


def _b_coker(it, args):
    _arity("coker", args, 1)
    return Module.coker(_need("coker", args[0], Matrix))


def _b_image(it, args):
    _arity("image", args, 1)
    return Module.image(_need("image", args[0], Matrix))


def _b_matrix(it, args):
    _arity("matrix", args, 1)
    v = args[0]
    if isinstance(v, Matrix):
        return v
    if isinstance(v, Ideal):
        return v.matrix()
    if not isinstance(v, list) or not v or not all(isinstance(r, list) for r in v):
        raise _Raise("matrix needs a nonempty list of rows, e.g. matrix{{x, y}, {z, w}}")
    ncols = len(v[0])
    if any(len(r) != ncols for r in v):
        raise _Raise("matrix rows have different lengths")
    ring = _ring_of([x for r in v for x in r], it.ring)
    if ring is None:
        raise _Raise("matrix needs a current ring")
    return Matrix(ring, v, len(v), ncols)


def _b_mutable(it, args):
    _arity("mutableMatrix", args, 1)
    return _need("mutableMatrix", args[0], Matrix)


def _b_transpose(it, args):
    _arity("transpose", args, 1)
    return _need("transpose", args[0], Matrix).transpose()


def _b_gens(it, args):
    _arity("gens", args, 1)
    v = args[0]
    if isinstance(v, PolyRing):
        return v.gens()
    if isinstance(v, LocalRing):
        return v.gens()
    if isinstance(v, Ideal):
        return v.matrix()
    if isinstance(v, Module):
        return v.gens
    raise _Raise(f"gens: unexpected {_kind(v)} argument")


def _b_presentation(it, args):
    _arity("presentation", args, 1)
    return _need("presentation", args[0], Module).presentation()


def _b_numgens(it, args):
    _arity("numgens", args, 1)
    v = args[0]
    if isinstance(v, Ideal):
        return len(v.gens)
    if isinstance(v, Module):
        return v.num_gens
    if isinstance(v, (PolyRing, LocalRing)):
        return v.nvars
    raise _Raise(f"numgens: unexpected {_kind(v)} argument")


def _b_monomial_curve(it, args):
    _arity("monomialCurveIdeal", args, 2)
    R, exps = args
    _need("monomialCurveIdeal", R, PolyRing)
    if not isinstance(exps, list) or not all(isinstance(a, int) and a > 0 for a in exps):
        raise _Raise("monomialCurveIdeal needs a list of positive integers")
    if len(exps) + 1 != R.nvars:
        raise _Raise(f"monomialCurveIdeal: {len(exps)} exponents need a ring with {len(exps) + 1} variables")
    return Ideal(R, monomial_curve_gens(R, exps))


def monomial_curve_gens(R: PolyRing, exps: List[int]) -> List[Polynomial]:
    """Minimal generators of the kernel of x_0 -> s^d, x_i -> s^(d-a_i) t^(a_i), d = max a_i."""
    d = max(exps)
    S = PolyRing(R.field, ("_s", "_t") + R.varnames, "lex")
    g = S.gens()
    s, t, xs = g[0], g[1], g[2:]
    images = [s ** d] + [s ** (d - a) * t ** a for a in exps]
    G = groebner_ideal([x - m for x, m in zip(xs, images)])
    kept = [p for p in G.polys() if all(e[0] == 0 and e[1] == 0 for e in p.terms_dict)]
    polys = [R.from_terms((e[2:], c) for e, c in p.terms_dict.items()) for p in kept]
    gens = mingens(Module.image(Matrix._raw(R, [polys], 1, len(polys))))
    out = [p.monic() for p in gens.entries[0]] if gens.nrows else []
    out.sort(key=lambda p: R.okey[p.lead_monomial()])
    return out


def _builtin_table() -> Dict[str, Callable]:
    table = {
        "ideal": _b_ideal,
        "localRing": _b_local_ring,
        "localize": _b_local_ring,
        "use": _b_use,
        "promote": _b_promote,
        "liftUp": _b_lift_up,
        "res": _b_res,
        "resolution": _b_res,
        "prune": _b_prune,
        "pruneComplex": _b_prune_complex,
        "pruneDiff": _b_prune_diff,
        "pruneUnit": _b_prune_unit,
        "syz": _b_syz,
        "mingens": _b_mingens,
        "trim": _b_trim,
        "minpres": _b_minpres,
        "minimalPresentation": _b_minpres,
        "length": _b_length,
        "hsf": _b_hsf,
        "hilbertSamuelFunction": _b_hsf,
        "betti": _b_betti,
        "ranks": _b_ranks,
        "dd": _b_dd,
        "isComplex": _b_is_complex,
        "coker": _b_coker,
        "cokernel": _b_coker,
        "image": _b_image,
        "matrix": _b_matrix,
        "mutableMatrix": _b_mutable,
        "transpose": _b_transpose,
        "gens": _b_gens,
        "presentation": _b_presentation,
        "numgens": _b_numgens,
        "monomialCurveIdeal": _b_monomial_curve,
    }
    return table
