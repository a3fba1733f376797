"""Text grammar for rational functions in ``t``.

::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('+' | '-') unary | power
    power := atom ('^' ['-'] INT)?
    atom  := INT | 't' | '(' expr ')'

Fractions are written with ``/``.  Errors carry line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from .poly import Poly
from .ratfunc import RatFunc
from .realalg import RealAlg

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass
class Token:
    kind: str  # 'int', 'name', 'op', 'end'
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1) is not None:
            out.append(Token("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(Token("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            out.append(Token("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class Parser:
    """Recursive-descent parser over a token list; subclassed for forms and curves."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(msg, self.text, tok.pos)

    def accept(self, text: str) -> bool:
        if self.tok.kind in ("op", "name") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")

    def finish(self) -> None:
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")

    # expressions
    def expr(self) -> RatFunc:
        acc = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RatFunc:
        acc = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.tok
            self.i += 1
            rhs = self.unary()
            if op.text == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    self.error("division by zero", op)
                acc = acc / rhs
        return acc

    def unary(self) -> RatFunc:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.accept("^"):
            neg = self.accept("-")
            if self.tok.kind != "int":
                self.error("expected integer exponent")
            n = int(self.tok.text)
            self.i += 1
            if neg:
                if base.is_zero():
                    self.error("zero to a negative power")
                n = -n
            base = base ** n
        return base

    def atom(self) -> RatFunc:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return RatFunc(int(tok.text))
        if tok.kind == "name" and tok.text == "t":
            self.i += 1
            return RatFunc(Poly.t())
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        self.error(f"unexpected {tok.text or 'end of input'!r}")

    def rational(self) -> Fraction:
        tok = self.tok
        e = self.expr()
        if not e.is_constant():
            self.error("expected a rational number", tok)
        return e.constant_value()

    def polynomial(self) -> Poly:
        tok = self.tok
        e = self.expr()
        if e.den.degree > 0:
            self.error("expected a polynomial", tok)
        return e.num

    def root_literal(self) -> RealAlg:
        """``root(poly, lo, hi)`` after the name ``root`` has been consumed."""
        start = self.tokens[self.i - 1]
        self.expect("(")
        p = self.polynomial()
        self.expect(",")
        lo = self.rational()
        self.expect(",")
        hi = self.rational()
        self.expect(")")
        if p.degree < 1:
            self.error("root() needs a nonconstant polynomial", start)
        a = RealAlg(p.squarefree_part, lo, hi)
        try:
            a.validate()
        except ValueError as exc:
            self.error(f"invalid root literal: {exc}", start)
        return a


def parse_ratfunc(text: str) -> RatFunc:
    p = Parser(text)
    e = p.expr()
    p.finish()
    return e


def parse_poly(text: str) -> Poly:
    p = Parser(text)
    e = p.polynomial()
    p.finish()
    return e


def parse_realalg(text: str) -> RealAlg:
    """A rational literal or ``root(poly, lo, hi)``."""
    p = Parser(text)
    if p.accept("root"):
        a = p.root_literal()
    else:
        a = RealAlg.rational(p.rational())
    p.finish()
    return a
