import pytest
from hypothesis import given
import hypothesis.strategies as st

from realcycles import samples
from realcycles.errors import DoubleTwist, EmptySpectrum, FieldMismatch, TwistMismatch
from realcycles.exactnum import Poly, RatFunc, sturm_isolate
from realcycles.literals import parse_form, parse_point
from realcycles.points import PLUS_INFINITY, ComplexPoint, RealPoint, finite_minus, finite_plus, real_point
from realcycles.quadform import (
    DiagonalForm,
    FieldTag,
    IPowerCertificate,
    Refusal,
    WittClass,
    change_basis,
    dsum,
    in_I_power,
    pfister,
    second_residue,
    signature_at,
    support,
    tensor,
    transfer_point,
    witt_class,
    witt_equal,
)

from conftest import entries, forms, real_forms

T = Poly.t()
F = parse_form
ZERO = real_point(0)


def test_dsum():
    assert dsum(F("<1>"), F("<-1>")) == F("<1, -1>")
    assert dsum(F("<t>"), F("<t>")) == F("<t, t>")
    assert dsum(DiagonalForm(FieldTag.RATFUNC, ()), F("<t, 2>")) == F("<t, 2>", FieldTag.RATFUNC)


def test_dsum_mismatch():
    with pytest.raises(FieldMismatch):
        dsum(F("<1>"), F("<t>"))
    with pytest.raises(TwistMismatch):
        dsum(F("<t>@twist(a)"), F("<t>@twist(b)"))


def test_tensor():
    assert tensor(F("<1, 1>"), F("<3>")) == F("<3, 3>")
    assert witt_equal(tensor(F("<1, -1>", FieldTag.RATFUNC), F("<t, 5, t-1>")), DiagonalForm(FieldTag.RATFUNC, ()))
    assert witt_equal(tensor(F("<t>"), F("<t>")), F("<1>", FieldTag.RATFUNC))
    with pytest.raises(DoubleTwist):
        tensor(F("<t>@twist(a)"), F("<1>@twist(b)", FieldTag.RATFUNC))


def test_pfister():
    assert pfister(-1) == F("<1, 1>")
    assert signature_at(pfister(-1)) == 2
    assert witt_equal(pfister(1), DiagonalForm(FieldTag.REAL, ()))
    assert pfister(RatFunc(T)) == F("<1, -t>")


def test_signature_examples():
    assert signature_at(F("<1, 1>")) == 2
    assert signature_at(F("<1, -1>")) == 0
    assert signature_at(F("<1, -(t^2-2)>"), finite_plus(0)) == 2
    with pytest.raises(EmptySpectrum):
        signature_at(F("<1>", FieldTag.COMPLEX))


def test_second_residue_examples():
    r = second_residue(F("<t>"), ZERO)
    assert r.value == 1 and r.twist == "(t)^*"
    assert second_residue(F("<1>", FieldTag.RATFUNC), ZERO).value == 0
    assert second_residue(F("<1, t*(t-1)>"), ZERO).value == -1
    c = ComplexPoint(T**2 + 1)
    r = second_residue(F("<t^2+1>"), c)
    assert r.field is FieldTag.COMPLEX and r.value == 1


def test_residue_at_infinity():
    inf = parse_point("inf")
    assert second_residue(F("<t>"), inf).value == 1
    assert second_residue(F("<-t^3, 1>"), inf).value == -1
    assert second_residue(F("<t^2>"), inf).value == 0


def test_transfer_point():
    assert transfer_point(WittClass(FieldTag.REAL, 1), ZERO).value == 1
    assert transfer_point(WittClass(FieldTag.COMPLEX, 1), ComplexPoint(T**2 + 1)).value == 0
    assert transfer_point(WittClass(FieldTag.REAL, 0), ZERO).value == 0


def test_witt_equal_examples():
    assert witt_equal(F("<1, -1>", FieldTag.RATFUNC), DiagonalForm(FieldTag.RATFUNC, ()))
    assert witt_equal(F("<t, t^3>"), F("<t, t>"))
    assert witt_equal(F("<1, t>"), F("<t, 1>"))
    assert not witt_equal(F("<1, t>"), F("<1, -t>"))


def test_witt_class_invariants():
    c = witt_class(F("<1, t*(t-1)>"))
    assert c.value == 2
    assert c.residue_at(ZERO).value == -1
    assert c.residue_at(real_point(1)).value == 1
    assert c.residue_at(real_point(5)).value == 0


def test_in_I_power_examples():
    cert = in_I_power(F("<1, 1>"), 1)
    assert isinstance(cert, IPowerCertificate)
    assert [tuple(int(a) for a in s) for _, s in cert.terms] == [(-1,)]
    ref = in_I_power(F("<1>"), 1)
    assert isinstance(ref, Refusal) and ref.reason == "OddRank"
    cert = in_I_power(F("<1, t>"), 1)
    assert cert.validates(F("<1, t>"))
    assert str(cert) == "<<-t>>"


def test_in_I_power_refusals():
    assert in_I_power(F("<1, 1>"), 2).reason == "Signature"
    assert in_I_power(F("<1, t>"), 2).reason == "Signature"
    ref = in_I_power(F("<1, t^2+1>"), 2)
    assert ref.reason in ("TorsionResidue", "Signature")


def test_in_I_power_level_two():
    f = F("<1, 1, 1, 1>")
    cert = in_I_power(f, 2)
    assert cert.validates(f)
    g = F("<1, t, 1, t>")
    cert = in_I_power(g, 2)
    assert isinstance(cert, IPowerCertificate) and cert.validates(g)


@given(forms(), st.sampled_from([T - 1, T**2 - 2, T**3 - 2]), entries(2))
def test_uniformizer_independence(f, p, u):
    for a in sturm_isolate(p):
        x = RealPoint(a)
        if u.valuation_at(a.minpoly) != 0:
            continue
        direct = second_residue(f, x, unit=u)
        via = change_basis(second_residue(f, x), x, u)
        assert direct.value == via.value and direct.twist == via.twist


@given(forms())
def test_residues_vanish_on_hyperbolic(f):
    h = dsum(f, -f)
    for x in support(h) + [parse_point("inf")]:
        assert second_residue(h, x).value == 0


@given(forms(3), forms(3), forms(3))
def test_witt_equal_congruence(f, g, h):
    assert witt_equal(f, f)
    assert witt_equal(f, g) == witt_equal(g, f)
    if witt_equal(f, g) and witt_equal(g, h):
        assert witt_equal(f, h)
    if witt_equal(f, g):
        assert witt_equal(dsum(f, h), dsum(g, h))
        assert witt_equal(tensor(f, h), tensor(g, h))


@given(st.randoms(use_true_random=False))
def test_witt_equal_congruence_on_equal_pairs(rng):
    from realcycles.verify import _witt_pair

    f, g = _witt_pair(rng)
    h = samples.random_form(rng, 2, 2)
    if witt_equal(f, g):
        assert witt_equal(dsum(f, h), dsum(g, h))
        assert witt_equal(tensor(f, h), tensor(g, h))


@given(forms(3), forms(3))
def test_signature_multiplicative(f, g):
    pts = [PLUS_INFINITY, finite_minus(0), finite_plus(1)]
    pts += [finite_plus(x.alpha) for x in support(f) if isinstance(x, RealPoint)]
    for P in pts:
        assert signature_at(tensor(f, g), P) == signature_at(f, P) * signature_at(g, P)


@given(st.randoms(use_true_random=False), st.integers(0, 3))
def test_certificates_validate(rng, j):
    f = samples.random_level_form(rng, j)
    cert = in_I_power(f, j)
    if isinstance(cert, IPowerCertificate):
        assert cert.level == j
        assert cert.validates(f)
    else:
        assert cert.reason == "Unknown"


@given(real_forms(), st.integers(0, 3))
def test_real_I_power_is_signature_divisibility(f, j):
    cert = in_I_power(f, j)
    sig = signature_at(f)
    expected = j == 0 or (f.rank % 2 == 0 and sig % 2**j == 0)
    assert bool(cert) == expected
    if cert:
        assert cert.validates(f)
