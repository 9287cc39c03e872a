"""Sub-lexer and parser for quoted polynomial shorthand such as ``"z(yw-z2)-w(xw-yz), xz-y2"``.

Inside quotes every letter is one variable, juxtaposition is multiplication,
digits directly after a variable or ``)`` are an exponent, and a leading
integer is a coefficient. ``*`` and ``^`` are accepted as well.
"""

from __future__ import annotations

from typing import List

from .ast import BinOp, Neg, Num, SVar


def _lex(text: str, line: int, col0: int, err):
    toks = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("NUM", text[i:j], col0 + i))
            i = j
            continue
        if c.isalpha():
            toks.append(("VAR", c, col0 + i))
            i += 1
            continue
        if c in "+-*^(),":
            toks.append(("OP", c, col0 + i))
            i += 1
            continue
        raise err(f"unexpected character {c!r} in polynomial shorthand", line, col0 + i)
    toks.append(("END", "", col0 + len(text)))
    return toks


class _ShorthandParser:
    def __init__(self, text, line, col0, err):
        self.toks = _lex(text, line, col0, err)
        self.i = 0
        self.line = line
        self.err = err

    @property
    def tok(self):
        return self.toks[self.i]

    def at(self, kind, text=None):
        k, t, _ = self.tok
        return k == kind and (text is None or t == text)

    def fail(self, msg):
        k, t, c = self.tok
        found = "end of shorthand" if k == "END" else repr(t)
        raise self.err(f"{msg}, found {found}", self.line, c)

    def gens(self) -> List:
        out = [self.poly()]
        while self.at("OP", ","):
            self.i += 1
            out.append(self.poly())
        if not self.at("END"):
            self.fail("expected ',' or end of shorthand")
        return out

    def poly(self):
        if self.at("OP", ",") or self.at("END"):
            self.fail("empty generator")
        pos = (self.line, self.tok[2])
        if self.at("OP", "-") or self.at("OP", "+"):
            neg = self.tok[1] == "-"
            self.i += 1
            node = self.term()
            if neg:
                node = Neg(node, pos=pos)
        else:
            node = self.term()
        while self.at("OP", "+") or self.at("OP", "-"):
            op = self.tok[1]
            p = (self.line, self.tok[2])
            self.i += 1
            node = BinOp(op, node, self.term(), pos=p)
        return node

    def _starts_factor(self):
        return self.at("VAR") or self.at("NUM") or self.at("OP", "(")

    def term(self):
        if not self._starts_factor():
            self.fail("expected a term")
        node = self.factor()
        while self._starts_factor() or self.at("OP", "*"):
            if self.at("OP", "*"):
                self.i += 1
                if not self._starts_factor():
                    self.fail("expected a factor after '*'")
            p = (self.line, self.tok[2])
            node = BinOp("*", node, self.factor(), pos=p)
        return node

    def factor(self):
        k, t, c = self.tok
        pos = (self.line, c)
        if k == "NUM":
            self.i += 1
            return Num(int(t), pos=pos)
        if k == "VAR":
            self.i += 1
            base = SVar(t, pos=pos)
        elif self.at("OP", "("):
            self.i += 1
            base = self.poly()
            if not self.at("OP", ")"):
                self.fail("expected ')'")
            self.i += 1
        else:
            self.fail("expected a variable, number or '('")
        return self._exponent(base)

    def _exponent(self, base):
        if self.at("OP", "^"):
            self.i += 1
            if not self.at("NUM"):
                self.fail("expected an exponent")
        if self.at("NUM"):
            k, t, c = self.tok
            self.i += 1
            return BinOp("^", base, Num(int(t), pos=(self.line, c)), pos=(self.line, c))
        return base


def parse_shorthand(text: str, line: int, col0: int, err) -> List:
    """Parse the body of a quoted shorthand; ``col0`` is the column of its first character."""
    return _ShorthandParser(text, line, col0, err).gens()
