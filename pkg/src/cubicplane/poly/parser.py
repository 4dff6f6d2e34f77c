"""Text <-> MultiPoly.

Grammar (whitespace insignificant)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := INT ['/' INT] | NAME | '(' expr ')'

Unary minus is only accepted at the head of an expression.  Parenthesized
subexpressions are an extension so factored forms can be read back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .fields import QQ
from .multipoly import MultiPoly

MAX_EXPONENT = 10_000

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        self.message = message
        super().__init__(f"{message} at position {position}: {text!r}")


@dataclass
class _Tok:
    kind: str  # "int", "name", "op", "end"
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(_Tok("int", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(_Tok("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", text, start)
            toks.append(_Tok("op", ch, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, vars: tuple[str, ...], field):
        self.text = text
        self.vars = vars
        self.field = field
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise PolySyntaxError(msg, self.text, tok.pos)

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.value == op:
            self.i += 1
            return True
        return False

    def parse(self) -> MultiPoly:
        if self.tok.kind == "end":
            self.error("empty polynomial")
        p = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.value!r}")
        return p

    def expr(self) -> MultiPoly:
        neg = self.accept("-")
        p = self.term()
        if neg:
            p = -p
        while True:
            if self.accept("+"):
                p = p + self.term()
            elif self.accept("-"):
                p = p - self.term()
            else:
                return p

    def term(self) -> MultiPoly:
        p = self.factor()
        while self.accept("*"):
            p = p * self.factor()
        return p

    def factor(self) -> MultiPoly:
        base = self.atom()
        if self.accept("^"):
            tok = self.tok
            if tok.kind != "int":
                self.error("exponent must be a nonnegative integer literal")
            self.i += 1
            n = int(tok.value)
            if n > MAX_EXPONENT:
                self.error(f"exponent {n} exceeds limit {MAX_EXPONENT}", tok)
            return base**n
        return base

    def atom(self) -> MultiPoly:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            num = int(tok.value)
            if self.accept("/"):
                d = self.tok
                if d.kind != "int":
                    self.error("denominator must be an integer literal")
                self.i += 1
                if int(d.value) == 0:
                    self.error("zero denominator", d)
                from fractions import Fraction

                return MultiPoly.constant(Fraction(num, int(d.value)), self.vars, self.field)
            return MultiPoly.constant(num, self.vars, self.field)
        if tok.kind == "name":
            if tok.value not in self.vars:
                self.error(f"unknown variable {tok.value!r}")
            self.i += 1
            return MultiPoly.variable(tok.value, self.vars, self.field)
        if self.accept("("):
            p = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return p
        if tok.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {tok.value!r}")


def parse_poly(text: str, vars: Sequence[str], field=QQ) -> MultiPoly:
    """Parse ``text`` into a :class:`MultiPoly` over ``vars``.

    Raises :class:`PolySyntaxError` with the offending position.
    """
    return _Parser(text, tuple(vars), field).parse()


def format_poly(p: MultiPoly) -> str:
    return str(p)
