"""Text grammars for forms, sign sections, closed points and curves.

::

    form    := '<' [expr (',' expr)*] '>' ['@' twist]
    twist   := 'twist' '(' NAME ')'
    section := 'section' '{' 'bps' '=' '[' alg* ']' ',' 'vals' '=' '[' int* ']' '}' ['@' twist]
    alg     := rational | 'root' '(' poly ',' rational ',' rational ')'
    point   := alg | 'inf' | 'complex' '(' poly ')'
    curve   := 'P1' | 'A1' | 'A1' 'minus' '{' point (',' point)* '}'
"""

from __future__ import annotations


from .errors import ParseError, RealCyclesError
from .exactnum import RealAlg
from .exactnum.parse import Parser
from .points import INF, ClosedPoint, ComplexPoint, RealPoint
from .quadform import DiagonalForm, FieldTag, form
from .realspec import SignSection


class LiteralParser(Parser):
    def bracketed(self, item, open_: str = "[", close: str = "]") -> list:
        self.expect(open_)
        out = []
        if not self.accept(close):
            out.append(item())
            while self.accept(","):
                out.append(item())
            self.expect(close)
        return out

    def realalg(self) -> RealAlg:
        if self.accept("root"):
            return self.root_literal()
        return RealAlg.rational(self.rational())

    def integer(self) -> int:
        tok = self.tok
        v = self.rational()
        if v.denominator != 1:
            self.error("expected an integer", tok)
        return int(v)

    def twist_suffix(self) -> str | None:
        if not self.accept("@"):
            return None
        self.expect("twist")
        self.expect("(")
        start = self.tok.pos
        depth = 1
        while True:
            if self.tok.kind == "end":
                self.error("unterminated twist name")
            if self.tok.text == "(":
                depth += 1
            elif self.tok.text == ")":
                depth -= 1
                if depth == 0:
                    break
            self.i += 1
        name = self.text[start:self.tok.pos].strip()
        if not name:
            self.error("empty twist name")
        self.expect(")")
        return name

    def form(self, field: FieldTag | None = None) -> DiagonalForm:
        start = self.tok
        entries = self.bracketed(self.expr, "<", ">")
        twist = self.twist_suffix()
        try:
            return form(entries, field, twist)
        except RealCyclesError as exc:
            if isinstance(exc, ParseError):
                raise
            self.error(str(exc), start)

    def section(self) -> SignSection:
        start = self.tok
        self.expect("section")
        self.expect("{")
        self.expect("bps")
        self.expect("=")
        bps = self.bracketed(self.realalg)
        self.expect(",")
        self.expect("vals")
        self.expect("=")
        vals = self.bracketed(self.integer)
        self.expect("}")
        twist = self.twist_suffix()
        try:
            return SignSection(tuple(bps), tuple(vals), twist)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            self.error(str(exc), start)

    def point(self) -> ClosedPoint:
        start = self.tok
        if self.accept("inf"):
            return INF
        if self.accept("complex"):
            self.expect("(")
            p = self.polynomial()
            self.expect(")")
            try:
                return ComplexPoint(p.monic())
            except RealCyclesError as exc:
                self.error(str(exc), start)
        return RealPoint(self.realalg())

    def curve(self):
        from .gersten import CurveSpec

        tok = self.tok
        if self.accept("P1"):
            return CurveSpec.P1()
        if self.accept("A1"):
            if self.accept("minus"):
                pts = self.bracketed(self.point, "{", "}")
                try:
                    return CurveSpec.A1minus(pts)
                except RealCyclesError as exc:
                    self.error(str(exc), tok)
            return CurveSpec.A1()
        self.error(f"expected a curve (P1, A1, A1 minus {{...}}), found {tok.text or 'end of input'!r}")


def _run(text: str, method: str, *args):
    p = LiteralParser(text)
    out = getattr(p, method)(*args)
    p.finish()
    return out


def parse_form(text: str, field: FieldTag | None = None) -> DiagonalForm:
    return _run(text, "form", field)


def parse_section(text: str) -> SignSection:
    return _run(text, "section")


def parse_point(text: str) -> ClosedPoint:
    return _run(text, "point")


def parse_curve(text: str):
    return _run(text, "curve")

