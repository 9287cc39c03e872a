"""Lexer and recursive-descent parser for locus scripts.

Quoted strings are handed to a separate sub-lexer (see :mod:`.shorthand`) in
which letters are single variables, juxtaposition multiplies and digits after
a variable or closing parenthesis are exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .ast import (BinOp, Call, ForList, Index, ListLit, Name, Neg, Num, RingLit, Script, Shorthand, Stmt)
from .shorthand import parse_shorthand

KEYWORDS = {"for", "from", "to", "list"}
ORDERS = {"grevlex", "lex", "glex"}


class ParseError(Exception):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


@dataclass
class Token:
    kind: str  # NUM IDENT STRING OP NL EOF
    text: str
    line: int
    col: int
    width: int = 0


_OPS = ["**", "==", "!=", "..", "=", "+", "-", "*", "/", "^", "(", ")", "[", "]", "{", "}", ",", ";", "#"]


def tokenize(text: str) -> List[Token]:
    toks: List[Token] = []
    i, line, col = 0, 1, 1
    depth = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            if depth == 0:
                toks.append(Token("NL", "\n", line, col))
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if text.startswith("--", i):
            while i < n and text[i] != "\n":
                i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("NUM", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            while j < n and text[j] == "'":
                j += 1
            toks.append(Token("IDENT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c == '"':
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    raise ParseError("unterminated string", line, col)
                j += 1
            if j >= n:
                raise ParseError("unterminated string", line, col)
            toks.append(Token("STRING", text[i + 1:j], line, col, j + 1 - i))
            col += j + 1 - i
            i = j + 1
            continue
        for op in _OPS:
            if text.startswith(op, i):
                if op in "([{":
                    depth += 1
                elif op in ")]}":
                    depth = max(0, depth - 1)
                toks.append(Token("OP", op, line, col))
                i += len(op)
                col += len(op)
                break
        else:
            raise ParseError(f"unexpected character {c!r}", line, col)
    toks.append(Token("EOF", "", line, col))
    return toks


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.lines = text.splitlines()
        self.toks = tokenize(text)
        self.i = 0

    # token helpers

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind == "OP" and t.text == text

    def at_kw(self, kw: str) -> bool:
        return self.tok.kind == "IDENT" and self.tok.text == kw

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}")
        return self.advance()

    def expect_kw(self, kw: str) -> Token:
        if not self.at_kw(kw):
            self.error(f"expected {kw!r}")
        return self.advance()

    def error(self, msg: str, tok: Optional[Token] = None):
        t = tok or self.tok
        found = "end of input" if t.kind == "EOF" else ("end of line" if t.kind == "NL" else repr(t.text))
        raise ParseError(f"{msg}, found {found}", t.line, t.col)

    # grammar

    def script(self) -> Script:
        stmts = []
        while True:
            while self.tok.kind == "NL" or self.at(";"):
                self.advance()
            if self.tok.kind == "EOF":
                return Script(tuple(stmts))
            start = self.tok
            s = self.statement()
            quiet = False
            if self.at(";"):
                self.advance()
                quiet = True
            elif self.tok.kind not in ("NL", "EOF"):
                self.error("expected end of statement")
            src = self._source(start)
            stmts.append(Stmt(s.expr, s.target, s.ring_decl, quiet, start.line, src))

    def _source(self, start: Token) -> str:
        end = self.toks[self.i - 1]
        if start.line == end.line and start.line <= len(self.lines):
            return self.lines[start.line - 1][start.col - 1:end.col - 1 + (end.width or len(end.text))].strip()
        return "\n".join(self.lines[start.line - 1:end.line]).strip()

    def statement(self) -> Stmt:
        t = self.tok
        if (t.kind == "IDENT" and t.text == "ring" and self.peek().kind == "IDENT"
                and self.peek(2).kind == "OP" and self.peek(2).text == "="):
            self.advance()
            name = self.advance().text
            self.advance()
            return Stmt(self.expr(), name, True)
        if t.kind == "IDENT" and self.peek().kind == "OP" and self.peek().text == "=" and t.text not in KEYWORDS:
            self.advance()
            self.advance()
            return Stmt(self.expr(), t.text)
        return Stmt(self.expr())

    def expr(self):
        if self.at_kw("for"):
            t = self.advance()
            if self.tok.kind != "IDENT" or self.tok.text in KEYWORDS:
                self.error("expected a loop variable")
            var = self.advance().text
            self.expect_kw("from")
            start = self.comparison()
            self.expect_kw("to")
            stop = self.comparison()
            self.expect_kw("list")
            body = self.expr()
            return ForList(var, start, stop, body, pos=(t.line, t.col))
        return self.comparison()

    def comparison(self):
        left = self.sum()
        if self.at("==") or self.at("!="):
            t = self.advance()
            right = self.sum()
            left = BinOp(t.text, left, right, pos=(t.line, t.col))
        return left

    def sum(self):
        left = self.product()
        while self.at("+") or self.at("-"):
            t = self.advance()
            left = BinOp(t.text, left, self.product(), pos=(t.line, t.col))
        return left

    def product(self):
        left = self.unary()
        while self.at("*") or self.at("/") or self.at("**"):
            t = self.advance()
            left = BinOp(t.text, left, self.unary(), pos=(t.line, t.col))
        return left

    def unary(self):
        if self.at("-"):
            t = self.advance()
            return Neg(self.unary(), pos=(t.line, t.col))
        return self.power()

    def power(self):
        base = self.application()
        if self.at("^"):
            t = self.advance()
            return BinOp("^", base, self.unary(), pos=(t.line, t.col))
        return base

    def _starts_argument(self) -> bool:
        t = self.tok
        if t.kind in ("NUM", "STRING"):
            return True
        if t.kind == "IDENT":
            return t.text not in KEYWORDS
        return t.kind == "OP" and t.text == "{"

    def application(self):
        node = self.postfix()
        # prefix application: `res I`, `ideal "x,y"`, `ideal gens R`
        if isinstance(node, Name) and node.ident not in KEYWORDS and self._starts_argument():
            arg = self.application()
            return Call(node, (arg,), pos=node.pos)
        return node

    def postfix(self):
        node = self.primary()
        while True:
            if self.at("("):
                t = self.advance()
                args = []
                if not self.at(")"):
                    args.append(self.expr())
                    while self.at(","):
                        self.advance()
                        args.append(self.expr())
                self.expect(")")
                node = Call(node, tuple(args), pos=(t.line, t.col))
            elif self.at("#"):
                t = self.advance()
                node = Index(node, self.primary(), pos=(t.line, t.col))
            else:
                return node

    def primary(self):
        t = self.tok
        if t.kind == "NUM":
            self.advance()
            return Num(int(t.text), pos=(t.line, t.col))
        if t.kind == "STRING":
            self.advance()
            gens = parse_shorthand(t.text, t.line, t.col + 1, ParseError)
            return Shorthand(t.text, tuple(gens), pos=(t.line, t.col))
        if t.kind == "IDENT":
            if t.text in KEYWORDS:
                self.error("unexpected keyword")
            if t.text == "ZZ" and self.peek().kind == "OP" and self.peek().text == "/":
                return self.ring_literal()
            if t.text in ("QQ", "kk") and self.peek().kind == "OP" and self.peek().text == "[":
                return self.ring_literal()
            self.advance()
            return Name(t.text, pos=(t.line, t.col))
        if self.at("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if self.at("{"):
            self.advance()
            items = []
            if not self.at("}"):
                items.append(self.expr())
                while self.at(","):
                    self.advance()
                    items.append(self.expr())
            self.expect("}")
            return ListLit(tuple(items), pos=(t.line, t.col))
        self.error("expected an expression")

    def ring_literal(self):
        t = self.advance()
        prime = None
        if t.text == "ZZ":
            self.expect("/")
            if self.tok.kind != "NUM":
                self.error("expected a prime after ZZ/")
            prime = int(self.advance().text)
        self.expect("[")
        specs = []
        if self.at("]"):
            self.error("a ring needs at least one variable")
        while True:
            specs.append(self.var_spec())
            if self.at(","):
                self.advance()
                continue
            break
        self.expect("]")
        order = None
        if self.tok.kind == "IDENT" and self.tok.text in ORDERS:
            order = self.advance().text
        return RingLit(t.text, prime, tuple(specs), order, pos=(t.line, t.col))

    def var_spec(self):
        t = self.tok
        if t.kind != "IDENT":
            self.error("expected a variable name")
        if t.text == "vars" and self.peek().kind == "OP" and self.peek().text == "(":
            self.advance()
            self.advance()
            a = self._num()
            self.expect("..")
            b = self._num()
            self.expect(")")
            return ("vars", a, b)
        self.advance()
        if self.at(".."):
            self.advance()
            if self.tok.kind != "IDENT":
                self.error("expected a variable name after '..'")
            return ("range", t.text, self.advance().text)
        return ("name", t.text)

    def _num(self) -> int:
        if self.tok.kind != "NUM":
            self.error("expected an integer")
        return int(self.advance().text)


def parse_script(text: str) -> Script:
    return Parser(text).script()
