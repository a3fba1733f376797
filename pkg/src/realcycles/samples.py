"""Seeded random generators for forms, cochains and orderings."""

from __future__ import annotations

import random
from fractions import Fraction

from .exactnum import Poly, RatFunc, sturm_isolate
from .gersten import GerstenCochain
from .points import (
    INF,
    MINUS_INFINITY,
    PLUS_INFINITY,
    ClosedPoint,
    ComplexPoint,
    RealPoint,
    finite_minus,
    finite_plus,
    real_point,
)
from .quadform import DiagonalForm, FieldTag

T = Poly.t()

# building blocks with rational, irrational and non-real roots
_LINEAR = [T - c for c in (-2, -1, 0, 1, 2, Fraction(1, 2), 3)]
_QUADRATIC = [T**2 - 2, T**2 + 1, T**2 - 3, T**2 + T + 1, T**2 - T - 1, T**2 + 2]
_CUBIC = [T**3 - 2]


def random_poly(rng: random.Random, max_degree: int = 4) -> Poly:
    """A product of small factors of total degree at most ``max_degree``, with a random unit."""
    p = Poly.const(rng.choice([1, -1, 2, -3, Fraction(1, 2)]))
    budget = rng.randint(0, max_degree)
    while budget > 0:
        pool = _LINEAR + (_QUADRATIC if budget >= 2 else []) + (_CUBIC if budget >= 3 else [])
        f = rng.choice(pool)
        p = p * f
        budget -= f.degree
    return p


def random_entry(rng: random.Random, max_degree: int = 4) -> RatFunc:
    num = random_poly(rng, max_degree)
    if rng.random() < 0.3:
        den = random_poly(rng, 2)
        return RatFunc(num, den)
    return RatFunc(num)


def random_form(rng: random.Random, max_rank: int = 4, max_degree: int = 4, min_rank: int = 1) -> DiagonalForm:
    n = rng.randint(min_rank, max_rank)
    return DiagonalForm(FieldTag.RATFUNC, tuple(random_entry(rng, max_degree) for _ in range(n)))


def random_even_form(rng: random.Random, max_pairs: int = 2, max_degree: int = 4) -> DiagonalForm:
    """A form in I: a sum of ``a <<b>>``."""
    entries = []
    for _ in range(rng.randint(1, max_pairs)):
        a, b = random_entry(rng, 2), random_entry(rng, 2)
        entries += [a, -a * b]
    return DiagonalForm(FieldTag.RATFUNC, tuple(entries))


def random_level_form(rng: random.Random, j: int) -> DiagonalForm:
    """A form with a certificate of level ``j``: ``<<-1>>^{j-1}`` times a form in I (or any form for j = 0)."""
    if j <= 0:
        return random_form(rng)
    base = random_even_form(rng)
    return DiagonalForm(FieldTag.RATFUNC, base.entries * 2 ** (j - 1))


def random_real_points(rng: random.Random, k: int) -> list[ClosedPoint]:
    pool: list[ClosedPoint] = [real_point(c) for c in (-2, -1, 0, 1, Fraction(1, 2), 3)]
    pool += [RealPoint(a) for a in sturm_isolate(T**2 - 2)]
    pool += [RealPoint(a) for a in sturm_isolate(T**3 - 2)]
    return rng.sample(pool, k)


def random_point(rng: random.Random, projective: bool = True) -> ClosedPoint:
    r = rng.random()
    if r < 0.15:
        return ComplexPoint(rng.choice([T**2 + 1, T**2 + T + 1, T**3 - 2]))
    if r < 0.3 and projective:
        return INF
    return random_real_points(rng, 1)[0]


def random_orderings(rng: random.Random, n: int, anchors=()) -> list:
    out = [PLUS_INFINITY, MINUS_INFINITY]
    for a in anchors:
        out += [finite_plus(a), finite_minus(a)]
    while len(out) < n:
        c = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
        out.append(rng.choice([finite_plus, finite_minus])(c))
    return out[:max(n, 2 + 2 * len(anchors))]


def random_residue_forms(rng: random.Random, level: int = 1, projective: bool = True) -> dict:
    """Explicit residue forms at a few points, each in ``I^{level-1}`` of its residue field."""
    out = {}
    for _ in range(rng.randint(1, 4)):
        x = random_point(rng, projective)
        if isinstance(x, ComplexPoint):
            if level >= 2:
                continue
            out[x] = DiagonalForm(FieldTag.COMPLEX, (1,) * rng.randint(0, 3))
            continue
        if level <= 1:
            ents = tuple(rng.choice([1, -1, 2, -5, Fraction(1, 3)]) for _ in range(rng.randint(0, 5)))
        else:
            q = 2 ** (level - 1)
            ents = ()
            for _ in range(rng.randint(0, 3)):
                ents += (rng.choice([1, -1]),) * q
            ents += (1, -1) * rng.randint(0, 2)
        out[x] = DiagonalForm(FieldTag.REAL, ents)
    return out


def random_unramified_affine(rng: random.Random, j: int = 0) -> DiagonalForm:
    """A form over Q(t) with no residues on A1: constants times squares, and <p, p> for non-real p."""
    entries = []
    for _ in range(rng.randint(1, 3)):
        c = rng.choice([1, -1, 2, -3])
        kind = rng.random()
        if kind < 0.5:
            entries.append(RatFunc(c))
        elif kind < 0.8:
            q = rng.choice(_LINEAR + _QUADRATIC)
            entries.append(RatFunc(q * q) * c)
        else:
            p = rng.choice([T**2 + 1, T**2 + T + 1, T**2 + 2])
            entries += [RatFunc(p) * c, RatFunc(p) * c]
    if j >= 1 and len(entries) % 2:
        entries.append(RatFunc(rng.choice([1, -1])))
    entries = entries * (2 ** max(j - 1, 0))
    return DiagonalForm(FieldTag.RATFUNC, tuple(entries))


def random_cochain_values(rng: random.Random, level: int, projective: bool, twist: int = 0) -> GerstenCochain:
    vals = {}
    for _ in range(rng.randint(0, 4)):
        x = random_point(rng, projective)
        if isinstance(x, ComplexPoint):
            if level >= 2:
                continue
            vals[x] = rng.randint(0, 1)
        else:
            vals[x] = rng.randint(-3, 3) * 2 ** max(level - 1, 0)
    return GerstenCochain.of_values(vals, level, twist)
