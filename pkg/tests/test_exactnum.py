from fractions import Fraction

import pytest
import sympy
from hypothesis import given
import hypothesis.strategies as st

from realcycles.errors import ZeroPolynomial
from realcycles.exactnum import (
    Poly,
    RatFunc,
    RealAlg,
    compare,
    factor_rational,
    parse_poly,
    parse_ratfunc,
    rational_between,
    sign_at,
    sturm_isolate,
)

from conftest import FACTORS, polys

T = Poly.t()
x = sympy.Symbol("t")


def to_sympy(p: Poly):
    return sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(p.coeffs))


def from_sympy(e) -> Poly:
    coeffs = sympy.Poly(e, x).all_coeffs()[::-1]
    return Poly([Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in coeffs])


def test_sturm_sqrt2():
    roots = sturm_isolate(T**2 - 2)
    assert len(roots) == 2
    for r in roots:
        assert r.defining.count_roots(r.lo, r.hi) == 1
    assert roots[0].hi <= 0 <= roots[1].lo


def test_sturm_no_real_roots():
    assert sturm_isolate(T**2 + 1) == []


def test_sturm_rational_roots():
    roots = sturm_isolate(T * (T - 1))
    assert [r.exact_rational for r in roots] == [0, 1]


def test_sturm_zero():
    with pytest.raises(ZeroPolynomial):
        sturm_isolate(Poly())


def test_sign_at_examples():
    sqrt2 = sturm_isolate(T**2 - 2)[1]
    assert sign_at(T - 1, sqrt2) == 1
    assert sign_at(T**2 - 2, sqrt2) == 0
    assert sign_at(Poly.const(-1), sqrt2) == -1


def test_factor_examples():
    assert set(factor_rational(T**4 - 1)) == {(T - 1, 1), (T + 1, 1), (T**2 + 1, 1)}
    assert factor_rational((T - 1) ** 2) == ((T - 1, 2),)
    assert factor_rational(T**3 - 2) == ((T**3 - 2, 1),)


@given(polys(4))
def test_roots_match_sympy(p):
    ours = sturm_isolate(p)
    theirs = sorted(sympy.Poly(to_sympy(p), x).real_roots()) if p.degree > 0 else []
    theirs = sorted(set(theirs), key=lambda r: float(r))
    assert len(ours) == len(theirs)
    for r, s in zip(ours, theirs):
        assert r.defining.count_roots(r.lo, r.hi) == 1
        assert r.lo < s < r.hi


@given(polys(3), polys(3), st.sampled_from(FACTORS))
def test_sign_at_multiplicative(p, q, f):
    for a in sturm_isolate(f):
        assert sign_at(p * q, a) == sign_at(p, a) * sign_at(q, a)


@given(polys(3), st.sampled_from(FACTORS))
def test_sign_at_matches_sympy(p, f):
    for a, s in zip(sturm_isolate(f), sorted(sympy.Poly(to_sympy(f), x).real_roots(), key=float)):
        v = sympy.simplify(to_sympy(p).subs(x, s))
        assert sign_at(p, a) == (0 if v == 0 else (1 if v > 0 else -1))


@given(polys(4), polys(4))
def test_factorization_multiplicative(p, q):
    def as_dict(fs):
        out = {}
        for f, m in fs:
            out[f] = out.get(f, 0) + m
        return out

    fp, fq, fpq = as_dict(factor_rational(p)), as_dict(factor_rational(q)), as_dict(factor_rational(p * q))
    merged = dict(fp)
    for f, m in fq.items():
        merged[f] = merged.get(f, 0) + m
    assert fpq == merged


@given(polys(4))
def test_factorization_matches_sympy(p):
    ours = {(f, m) for f, m in factor_rational(p)}
    _, theirs = sympy.factor_list(to_sympy(p), x)
    assert ours == {(from_sympy(f).monic(), m) for f, m in theirs}


def test_factor_degree_twelve():
    p = (T**3 - 2) * (T**4 + 1) * (T**2 - T - 1) * (T**3 - 3 * T + 1)
    assert set(factor_rational(p)) == {(T**3 - 2, 1), (T**4 + 1, 1), (T**2 - T - 1, 1), (T**3 - 3 * T + 1, 1)}


def test_compare_and_between():
    r2, r3 = sturm_isolate(T**2 - 2)[1], sturm_isolate(T**2 - 3)[1]
    assert compare(r2, r3) == -1 and compare(r3, r2) == 1 and compare(r2, r2) == 0
    c = rational_between(r2, r3)
    assert compare(r2, RealAlg.rational(c)) == -1 and compare(RealAlg.rational(c), r3) == -1


def test_realalg_canonical_key():
    a = sturm_isolate((T**2 - 2) * (T - 5))[1]
    b = sturm_isolate(T**2 - 2)[1]
    assert a == b and hash(a) == hash(b)


def test_parse_and_print():
    f = parse_ratfunc("(t^2 - 1)/(2*t + 2)")
    assert f == RatFunc(T - 1, Poly.const(2))
    assert parse_poly("3/2 - t^3") == Poly([Fraction(3, 2), 0, 0, -1])
    assert parse_ratfunc(str(f)) == f
