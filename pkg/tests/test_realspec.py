from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from realcycles.errors import NotInIj, SupportTooSmall
from realcycles.exactnum import Poly, RealAlg, rational_between, sturm_isolate
from realcycles.literals import parse_form, parse_section
from realcycles.points import INF, MINUS_INFINITY, PLUS_INFINITY, ComplexPoint, RealPoint, finite_minus, finite_plus, real_point
from realcycles.quadform import dsum, second_residue, support
from realcycles.realspec import PointValue, SignSection, beta, d_re, sign_infty_normalize, signature, transfer_section

from conftest import forms

T = Poly.t()
F = parse_form
sqrt2 = sturm_isolate(T**2 - 2)


def sample_points(s: SignSection) -> list[Fraction]:
    """One rational inside every interval cut out by the breakpoints."""
    bps = s.breakpoints
    if not bps:
        return [Fraction(0)]
    out = [Fraction(bps[0].lo) - 1]
    for a, b in zip(bps, bps[1:]):
        out.append(rational_between(a, b))
    out.append(Fraction(bps[-1].hi) + 1)
    return out


def brute_signature(f, c: Fraction) -> int:
    return sum(1 if a(c) > 0 else -1 for a in f.entries)


def test_signature_examples():
    assert signature(F("<1, 1>")) == SignSection.constant(2)
    s = signature(F("<t>"))
    assert s(MINUS_INFINITY) == -1 and s(PLUS_INFINITY) == 1 and s(finite_minus(0)) == -1
    s = signature(F("<1, -(t^2-2)>"))
    assert s == SignSection(tuple(sqrt2), (0, 2, 0))


def test_beta_examples():
    v = beta(signature(F("<t>")), 0)
    assert v.value == 2 and v.twist == "(t)^*"
    assert beta(SignSection.constant(3), 5).value == 0
    assert beta(signature(F("<1, -(t^2-2)>")), RealPoint(sqrt2[1])).value == -2


def test_transfer_section():
    assert transfer_section(PointValue(real_point(0), 3)).value == 3
    assert transfer_section(PointValue(ComplexPoint(T**2 + 1), 1)).value == 0
    assert transfer_section(PointValue(real_point(0), 0)).value == 0


def test_d_re_examples():
    vals = d_re(signature(F("<t>")), [real_point(0), INF])
    assert [v.value for v in vals] == [2, -2]
    assert vals[1].twist == "(1/t)^*"
    assert all(v.value == 0 for v in d_re(SignSection.constant(4), [real_point(1), INF]))
    vals = d_re(signature(F("<1, -(t^2-2)>")), [RealPoint(sqrt2[0]), RealPoint(sqrt2[1]), INF])
    assert [v.value for v in vals] == [2, -2, 0]


def test_d_re_support_too_small():
    with pytest.raises(SupportTooSmall):
        d_re(signature(F("<t>")), [INF])


def test_normalize():
    assert sign_infty_normalize(SignSection.constant(2), 1) == SignSection.constant(1)
    assert sign_infty_normalize(SignSection.constant(0), 3) == SignSection.constant(0)
    s = sign_infty_normalize(signature(F("<1, t>")), 1)
    assert (s(finite_minus(0)), s(finite_plus(0))) == (0, 1)
    with pytest.raises(NotInIj):
        sign_infty_normalize(signature(F("<t>")), 1)


def test_section_literal_roundtrip():
    s = signature(F("<1, -(t^2-2), t-1>"))
    assert parse_section(str(s)) == s


@given(forms())
def test_signature_matches_brute_force(f):
    s = signature(f)
    for c in sample_points(s):
        assert s(finite_plus(c)) == brute_signature(f, c)


@given(forms())
def test_square_with_second_residue(f):
    s = signature(f)
    for x in support(f):
        if isinstance(x, RealPoint):
            assert 2 * second_residue(f, x).value == beta(s, x.alpha).value


@given(forms(), st.integers(-5, 5))
def test_beta_vanishes_off_breakpoints(f, c):
    s = signature(f).canonicalize()
    a = RealAlg.rational(Fraction(c, 3))
    if a not in s.breakpoints:
        assert beta(s, a).value == 0


@given(forms(3), forms(3))
def test_beta_additive(f, g):
    s, r = signature(f), signature(g)
    for x in support(dsum(f, g)):
        if isinstance(x, RealPoint):
            assert beta(s + r, x.alpha).value == beta(s, x.alpha).value + beta(r, x.alpha).value
            assert transfer_section(beta(s + r, x.alpha)).value == beta(s, x.alpha).value + beta(r, x.alpha).value


@given(forms())
def test_d_re_vanishes_iff_unramified(f):
    pts = support(f)
    vals = d_re(signature(f), pts)
    real = [x for x in pts if isinstance(x, RealPoint)]
    ramified = any(second_residue(f, x).value for x in real)
    assert any(v.value for v in vals) == ramified


@given(forms())
def test_canonicalize_preserves_values(f):
    s = signature(f)
    c = s.canonicalize()
    assert c == s
    for a in s.breakpoints:
        for P in (finite_plus(a), finite_minus(a)):
            assert c(P) == s(P)
