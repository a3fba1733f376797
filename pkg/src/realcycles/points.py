"""Closed points of the real affine and projective line.

Real points are single real roots of a Q-irreducible factor.  All non-real
roots of one Q-irreducible factor are kept in a single bucket: second
residues there only depend on valuation parities, which agree on conjugates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .errors import MalformedPoint
from .exactnum import Poly, RealAlg, compare, factor_rational, sturm_isolate


@dataclass(frozen=True)
class RealPoint:
    alpha: RealAlg

    @property
    def factor(self) -> Poly:
        return self.alpha.minpoly

    @property
    def uniformizer(self) -> str:
        r = self.alpha.exact_rational
        if r is not None:
            return str(Poly.linear_root(r))
        return f"t - {self.alpha!r}"

    def __str__(self) -> str:
        return str(self.alpha)


@dataclass(frozen=True)
class ComplexPoint:
    factor: Poly

    def __post_init__(self):
        f = self.factor
        if f.degree < 2 or f.lc != 1 or len(factor_rational(f)) != 1 or factor_rational(f)[0][1] != 1:
            raise MalformedPoint(f"complex bucket needs a monic irreducible factor, got {f}")
        if len(sturm_isolate(f)) == f.degree:
            raise MalformedPoint(f"{f} has no non-real roots")

    @property
    def count(self) -> int:
        """Number of closed points (conjugate pairs) in the bucket."""
        return (self.factor.degree - len(sturm_isolate(self.factor))) // 2

    @property
    def uniformizer(self) -> str:
        return str(self.factor)

    def __str__(self) -> str:
        return f"complex({self.factor})"


@dataclass(frozen=True)
class Infinity:
    uniformizer = "1/t"

    def __str__(self) -> str:
        return "inf"


INF = Infinity()
ClosedPoint = RealPoint | ComplexPoint | Infinity


def real_point(x) -> RealPoint:
    if isinstance(x, RealPoint):
        return x
    if isinstance(x, RealAlg):
        return RealPoint(x)
    return RealPoint(RealAlg.rational(Fraction(x)))


def points_of_factor(p: Poly) -> list[ClosedPoint]:
    """Closed points of A^1 cut out by a monic Q-irreducible ``p``."""
    roots = sturm_isolate(p)
    out: list[ClosedPoint] = [RealPoint(a) for a in roots]
    if len(roots) < p.degree:
        out.append(ComplexPoint(p))
    return out


def _cmp(a: ClosedPoint, b: ClosedPoint) -> int:
    ka = 0 if isinstance(a, RealPoint) else 1 if isinstance(a, ComplexPoint) else 2
    kb = 0 if isinstance(b, RealPoint) else 1 if isinstance(b, ComplexPoint) else 2
    if ka != kb:
        return -1 if ka < kb else 1
    if ka == 0:
        return compare(a.alpha, b.alpha)
    if ka == 1:
        x, y = (a.factor.degree, a.factor.coeffs), (b.factor.degree, b.factor.coeffs)
        return (x > y) - (x < y)
    return 0


point_sort_key = cmp_to_key(_cmp)


def sorted_points(points) -> list[ClosedPoint]:
    return sorted(points, key=point_sort_key)


@dataclass(frozen=True)
class Ordering:
    """A point of the real spectrum of R or R(t).

    ``kind`` is ``"R"`` for the unique ordering of R, ``"+"``/``"-"`` for the
    germ just right/left of ``alpha``, and ``"+inf"``/``"-inf"`` for the two
    orderings at infinity.
    """

    kind: str
    alpha: RealAlg | None = None

    def __post_init__(self):
        if self.kind not in ("R", "+", "-", "+inf", "-inf"):
            raise MalformedPoint(f"unknown ordering kind {self.kind!r}")
        if (self.kind in ("+", "-")) != (self.alpha is not None):
            raise MalformedPoint("finite orderings carry exactly one real algebraic number")

    def __str__(self) -> str:
        if self.kind in ("+", "-"):
            return f"{self.alpha}{self.kind}"
        return self.kind


REAL_ORDERING = Ordering("R")
PLUS_INFINITY = Ordering("+inf")
MINUS_INFINITY = Ordering("-inf")


def finite_plus(a) -> Ordering:
    return Ordering("+", a if isinstance(a, RealAlg) else RealAlg.rational(a))


def finite_minus(a) -> Ordering:
    return Ordering("-", a if isinstance(a, RealAlg) else RealAlg.rational(a))


def germ_sign(f, P: Ordering) -> int:
    """Sign of a nonzero rational function at an ordering of R(t)."""
    if P.kind == "R":
        if not f.is_constant():
            raise MalformedPoint("the ordering of R only evaluates constants")
        return 1 if f.constant_value() > 0 else -1
    if P.kind in ("+inf", "-inf"):
        k, s = f.infinity_unit_sign()
        return s if P.kind == "+inf" or k % 2 == 0 else -s
    k, s = f.local_unit_sign(P.alpha)
    return s if P.kind == "+" or k % 2 == 0 else -s
