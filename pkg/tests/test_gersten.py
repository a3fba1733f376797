import random
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from realcycles import samples
from realcycles.cellular import FinAbGroup
from realcycles.errors import DegenerateSubstitution, DoubleTwist, NonTransverse, NotACocycle, NotInIj, TwistMismatch
from realcycles.exactnum import Poly, RatFunc, sturm_isolate
from realcycles.gersten import (
    CurveSpec,
    GerstenCochain,
    boundary_localization,
    cohomology_groups,
    cup,
    cycle_class,
    d0,
    euler_O,
    is_coboundary,
    is_cocycle,
    point_class,
    pullback_sub,
    pushforward_point,
    total_transfer,
)
from realcycles.literals import parse_curve, parse_form
from realcycles.points import INF, ComplexPoint, RealPoint, real_point
from realcycles.quadform import FieldTag, WittClass

from conftest import forms

T = Poly.t()
P1, A1 = CurveSpec.P1(), CurveSpec.A1()
U0 = CurveSpec.A1minus([0])


def form0(text, level=0, twist=0):
    return GerstenCochain.of_form(parse_form(text, FieldTag.RATFUNC), level, twist)


def values(**kw):
    return GerstenCochain.of_values(kw)


def test_curve_literals():
    assert parse_curve("P1") == P1
    X = parse_curve("A1 minus {0, 1, root(t^2-2, 1, 2)}")
    assert len(X.real_removed()) == 3
    assert not X.contains(real_point(1)) and X.contains(real_point(2))


def test_d0_examples():
    c = d0(form0("<t>"), P1)
    assert c.value_at(real_point(0)) == 1 and c.value_at(INF) == -1
    assert total_transfer(c) == 0
    assert d0(form0("<1, 1>"), P1).is_zero()
    assert d0(form0("<1, t>"), U0).is_zero()


def test_is_cocycle_examples():
    assert is_cocycle(form0("<1, t>", 1), U0)
    assert not is_cocycle(form0("<t>"), A1)
    assert is_cocycle(GerstenCochain.of_values({real_point(3): 5}), A1)


def test_is_coboundary_examples():
    c = GerstenCochain.of_values({real_point(0): 1, INF: -1})
    ok, pre = is_coboundary(c, P1)
    assert ok and d0(pre, P1) == c
    assert is_coboundary(GerstenCochain.of_values({real_point(0): 1}), P1) == (False, None)
    ok, pre = is_coboundary(GerstenCochain.zero(1), P1)
    assert ok and pre.is_zero()


def test_pushforward_examples():
    c = pushforward_point(0, WittClass(FieldTag.REAL, 1))
    assert c.level == 1 and c.value_at(real_point(0)) == 1
    assert pushforward_point(0, 0).is_zero()
    ok, _ = is_coboundary(pushforward_point(1, 1, P1), P1)
    assert not ok


def test_euler_examples():
    assert euler_O(-1).values == ((real_point(0), 1),)
    assert euler_O(0).is_zero()
    e = cycle_class(euler_O(-2), P1)
    assert e.values == (0,) and not e.locus.components[0].mobius


def test_cycle_class_examples():
    assert cycle_class(form0("<1, t>", 1), U0).values == (0, 1)
    assert cycle_class(form0("<1, -t>", 1), U0).values == (1, 0)
    e = cycle_class(euler_O(-1), P1)
    assert e.locus.components[0].mobius and e.values == (1,)
    with pytest.raises(NotInIj):
        cycle_class(GerstenCochain.of_values({real_point(0): 1}, 2), P1)
    with pytest.raises(NotACocycle):
        cycle_class(form0("<t>"), A1)


def test_boundary_localization_examples():
    b = boundary_localization(form0("<1, t>", 1), [0])
    assert b == pushforward_point(0, 1)
    assert boundary_localization(form0("<1, 1>", 1), [0, 2]).is_zero()
    b = boundary_localization(form0("<t*(t-1)>"), [0, 1])
    assert b.value_at(real_point(0)) == -1 and b.value_at(real_point(1)) == 1


def test_pullback_examples():
    t2 = RatFunc(T**2)
    assert pullback_sub(form0("<t>"), t2).form == parse_form("<t^2>")
    assert pullback_sub(form0("<1, 1>"), t2).form == parse_form("<1, 1>", FieldTag.RATFUNC)
    assert pullback_sub(form0("<1, -(t-3)>"), t2).form == parse_form("<1, -(t^2-3)>")
    with pytest.raises(DegenerateSubstitution):
        pullback_sub(form0("<t-1>"), RatFunc(Poly.const(1)))


def test_pullback_commutes_with_cycle_class():
    c = form0("<1, -(t-3)>", 1)
    X = CurveSpec.A1minus([3])
    r3 = sturm_isolate(T**2 - 3)
    Y = CurveSpec.A1minus([RealPoint(a) for a in r3])
    base = cycle_class(c, X)
    pulled = cycle_class(pullback_sub(c, RatFunc(T**2)), Y)
    for x in (Fraction(-5), Fraction(0), Fraction(1), Fraction(5)):
        assert pulled.at(x) == base.at(x * x)


def test_cup_examples():
    c1 = GerstenCochain.of_values({real_point(0): 1, real_point(2): -3}, 1)
    assert cup(form0("<1, 1>"), c1) == c1.scale(2).with_level(1)
    assert cup(form0("<1, -1>"), c1).is_zero()
    v = cup(form0("<1, t-5>"), GerstenCochain.of_values({real_point(0): 1}, 1))
    assert v.value_at(real_point(0)) == 0
    with pytest.raises(NonTransverse):
        cup(form0("<t>"), GerstenCochain.of_values({real_point(0): 1}))
    with pytest.raises(DoubleTwist):
        cup(form0("<1>", 0, 1), GerstenCochain.of_values({real_point(0): 1}, 0, 1))


def test_affine_twist_rejected():
    with pytest.raises(TwistMismatch):
        d0(form0("<t>", 0, 1), A1)


def test_cohomology_groups():
    assert cohomology_groups(P1, 0) == (FinAbGroup(1), FinAbGroup(1))
    assert cohomology_groups(P1, 1) == (FinAbGroup(0), FinAbGroup(0, (2,)))
    assert cohomology_groups(A1, 0) == (FinAbGroup(1), FinAbGroup(0))
    assert cohomology_groups(U0, 0) == (FinAbGroup(2), FinAbGroup(0))
    X = parse_curve("A1 minus {0, 1, root(t^2-2, 1, 2)}")
    assert cohomology_groups(X) == (FinAbGroup(4), FinAbGroup(0))


@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=5), min_size=1, max_size=5, unique=True))
def test_cohomology_groups_independent_of_cuts(extra):
    for d in (0, 1):
        assert cohomology_groups(P1, d, extra) == cohomology_groups(P1, d)
    assert cohomology_groups(U0, 0, extra) == cohomology_groups(U0, 0)


def test_cochain_json_roundtrip():
    for c in (form0("<1, t*(t-1)>", 1, 1), GerstenCochain.of_values({real_point(0): 2, INF: -2, ComplexPoint(T**2 + 1): 1}, 1)):
        assert GerstenCochain.from_json(c.dumps()) == c


def test_reciprocity():
    rng = random.Random(11)
    for _ in range(500):
        f = samples.random_form(rng, 3, 3)
        c = GerstenCochain.of_form(f, 0, 0)
        assert total_transfer(d0(c, P1)) == 0


@given(forms(), st.integers(0, 1))
def test_preimages_are_exact(f, d):
    c = d0(GerstenCochain.of_form(f, 0, d), P1)
    ok, pre = is_coboundary(c, P1)
    assert ok
    if pre is not None:
        assert d0(pre, P1) == c


@given(st.randoms(use_true_random=False), st.integers(0, 2), st.integers(0, 1))
def test_coboundary_refusals_have_witness(rng, j, d):
    c = samples.random_cochain_values(rng, j, True, d)
    ok, pre = is_coboundary(c, P1)
    if not ok:
        total = total_transfer(c)
        assert total != 0
        if d and j >= 1:
            assert (total // 2 ** (j - 1)) % 2 == 1
    elif pre is not None:
        assert d0(pre, P1) == c


@given(st.randoms(use_true_random=False), st.integers(0, 2))
def test_affine_always_coboundary(rng, j):
    c = samples.random_cochain_values(rng, j, False)
    ok, pre = is_coboundary(c, A1)
    assert ok
    if pre is not None:
        assert d0(pre, A1) == c


@given(st.randoms(use_true_random=False))
def test_pushforward_matches_point_class(rng):
    x = samples.random_point(rng)
    if isinstance(x, ComplexPoint):
        v = 1
    else:
        v = WittClass(FieldTag.REAL, 1)
    d = rng.choice([0, 1])
    assert cycle_class(pushforward_point(x, v, P1, 0, d), P1) == point_class(x, P1, d)


@pytest.mark.parametrize("d", range(-6, 7))
def test_euler_parity(d):
    cc = cycle_class(euler_O(d), P1)
    assert cc.locus.components[0].mobius == bool(d % 2)
    assert cc.values == ((1,) if d % 2 else (0,))


@given(st.randoms(use_true_random=False), st.integers(0, 2))
def test_cycle_class_restricts_to_open_subcurves(rng, j):
    f = samples.random_unramified_affine(rng, j)
    c = GerstenCochain.of_form(f, j)
    on_line = cycle_class(c, A1)
    U = CurveSpec.A1minus([0, 1])
    on_open = cycle_class(c, U)
    assert all(v == on_line.values[0] for v in on_open.values)


@given(st.randoms(use_true_random=False))
def test_cup_multiplicative(rng):
    U = CurveSpec.A1minus([0, 1])
    a = GerstenCochain.of_form(samples.random_unramified_affine(rng, 1), 1)
    b = form0(rng.choice(["<1, t*(t-1)>", "<1, -t*(t-1)>", "<t, t-1>"]), 1)
    assert cycle_class(cup(a, b), U) == cycle_class(a, U).cup(cycle_class(b, U))
