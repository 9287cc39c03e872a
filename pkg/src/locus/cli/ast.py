"""Syntax tree for locus scripts, plus a renderer whose output reparses to an equal tree.

Source positions are carried for error messages but excluded from equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union


@dataclass(frozen=True)
class Node:
    pass


@dataclass(frozen=True)
class Num(Node):
    value: int
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Name(Node):
    ident: str
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Shorthand(Node):
    """A quoted list of polynomials such as ``"yw-z2, xw-yz"``; ``gens`` holds the parsed forms."""

    text: str
    gens: Tuple[Node, ...] = field(compare=False, default=())
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class SVar(Node):
    """A single-letter variable inside shorthand."""

    ident: str
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Neg(Node):
    operand: Node
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Call(Node):
    func: Node
    args: Tuple[Node, ...]
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Index(Node):
    target: Node
    index: Node
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ListLit(Node):
    items: Tuple[Node, ...]
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ForList(Node):
    var: str
    start: Node
    stop: Node
    body: Node
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


# ring variable specs: ("name", "x"), ("range", "a", "d"), ("vars", 0, 5)
VarSpec = Tuple[Union[str, int], ...]


@dataclass(frozen=True)
class RingLit(Node):
    field_name: str  # "ZZ", "QQ" or "kk"
    prime: Optional[int]
    vars: Tuple[VarSpec, ...]
    order: Optional[str] = None
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Stmt(Node):
    expr: Node
    target: Optional[str] = None
    ring_decl: bool = False
    quiet: bool = False
    line: int = field(default=0, compare=False)
    source: str = field(default="", compare=False)


@dataclass(frozen=True)
class Script(Node):
    stmts: Tuple[Stmt, ...]


# ------------------------------------------------------------------ render

_ATOMS = (Num, Name, Shorthand, SVar, Call, Index, ListLit, RingLit)


def _wrap(node: Node) -> str:
    s = render(node)
    return s if isinstance(node, _ATOMS) else f"({s})"


def _render_var(v: VarSpec) -> str:
    if v[0] == "name":
        return str(v[1])
    if v[0] == "range":
        return f"{v[1]}..{v[2]}"
    return f"vars({v[1]}..{v[2]})"


def render(node: Node) -> str:
    if isinstance(node, Script):
        return "\n".join(render(s) for s in node.stmts) + ("\n" if node.stmts else "")
    if isinstance(node, Stmt):
        body = render(node.expr)
        if node.target is not None:
            body = f"{'ring ' if node.ring_decl else ''}{node.target} = {body}"
        return body + (";" if node.quiet else "")
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, (Name, SVar)):
        return node.ident
    if isinstance(node, Shorthand):
        return '"' + node.text + '"'
    if isinstance(node, BinOp):
        return f"{_wrap(node.left)} {node.op} {_wrap(node.right)}"
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand)}"
    if isinstance(node, Call):
        return f"{_wrap(node.func)}({', '.join(render(a) for a in node.args)})"
    if isinstance(node, Index):
        return f"{_wrap(node.target)}#{_wrap(node.index)}"
    if isinstance(node, ListLit):
        return "{" + ", ".join(render(a) for a in node.items) + "}"
    if isinstance(node, ForList):
        return (f"for {node.var} from {render(node.start)} to {render(node.stop)} "
                f"list {render(node.body)}")
    if isinstance(node, RingLit):
        head = f"ZZ/{node.prime}" if node.field_name == "ZZ" else node.field_name
        out = f"{head}[{', '.join(_render_var(v) for v in node.vars)}]"
        return out + (f" {node.order}" if node.order else "")
    raise TypeError(f"cannot render {node!r}")
