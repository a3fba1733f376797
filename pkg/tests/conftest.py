from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from realcycles.exactnum import Poly, RatFunc
from realcycles.quadform import DiagonalForm, FieldTag

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

T = Poly.t()

FACTORS = [T - c for c in (-2, -1, 0, 1, 2, Fraction(1, 2), 3)] + [
    T**2 - 2,
    T**2 + 1,
    T**2 - 3,
    T**2 + T + 1,
    T**2 - T - 1,
    T**3 - 2,
]
UNITS = [1, -1, 2, -3, Fraction(1, 2), Fraction(-5, 3)]


@st.composite
def polys(draw, max_factors=3):
    p = Poly.const(draw(st.sampled_from(UNITS)))
    for f in draw(st.lists(st.sampled_from(FACTORS), max_size=max_factors)):
        p = p * f
    return p


@st.composite
def entries(draw, max_factors=3):
    num = draw(polys(max_factors))
    if draw(st.booleans()):
        return RatFunc(num, draw(polys(1)))
    return RatFunc(num)


@st.composite
def forms(draw, max_rank=4, max_factors=3, min_rank=0):
    es = draw(st.lists(entries(max_factors), min_size=min_rank, max_size=max_rank))
    return DiagonalForm(FieldTag.RATFUNC, tuple(es))


@st.composite
def real_forms(draw, max_rank=6):
    es = draw(st.lists(st.sampled_from(UNITS), max_size=max_rank))
    return DiagonalForm(FieldTag.REAL, tuple(Fraction(e) for e in es))
