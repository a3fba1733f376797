from fractions import Fraction

import pytest
from hypothesis import given

from realcycles.errors import ParseError
from realcycles.literals import parse_curve, parse_form, parse_point, parse_section
from realcycles.points import INF, ComplexPoint, RealPoint, real_point
from realcycles.quadform import FieldTag
from realcycles.realspec import signature

from conftest import forms


def test_form_grammar():
    f = parse_form("<1, t^2 - 1, (t+1)/(t-2)>@twist((t)^*)")
    assert f.field is FieldTag.RATFUNC and f.rank == 3 and f.twist == "(t)^*"
    assert parse_form("<>").rank == 0
    assert parse_form("<1/2, -3>").field is FieldTag.REAL


def test_points():
    assert parse_point("inf") is INF
    assert isinstance(parse_point("complex(t^2 + 1)"), ComplexPoint)
    p = parse_point("root(t^2 - 2, 1, 2)")
    assert isinstance(p, RealPoint) and p.alpha.minpoly.degree == 2
    assert parse_point("3/4") == real_point(Fraction(3, 4))


@pytest.mark.parametrize(
    "text, column",
    [("<1, t+>", 7), ("<1, 2", 6), ("section{ bps=[0], vals=[1] }", 1), ("<0>", 1)],
)
def test_errors_report_position(text, column):
    parse = parse_section if text.startswith("section") else parse_form
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line == 1 and exc.value.column == column


def test_bad_curve():
    with pytest.raises(ParseError):
        parse_curve("P2")
    with pytest.raises(ParseError):
        parse_curve("A1 minus {0, 0}")


@given(forms())
def test_form_roundtrip(f):
    g = parse_form(str(f), FieldTag.RATFUNC)
    assert g == f


@given(forms())
def test_section_roundtrip(f):
    s = signature(f)
    assert parse_section(str(s)) == s
    assert str(parse_section(str(s))) == str(s)
