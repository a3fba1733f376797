"""Locally constant integer sections on the real spectrum of R and R(t).

A section over R(t) is stored by its breakpoints and the value on each open
interval between them; the value at a germ ``alpha+`` or ``alpha-`` is read off
the adjacent interval.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

from .errors import MalformedPoint, NotInIj, SupportTooSmall
from .exactnum import RatFunc, RealAlg, compare, sturm_isolate
from .points import (
    INF,
    MINUS_INFINITY,
    PLUS_INFINITY,
    ClosedPoint,
    ComplexPoint,
    Infinity,
    Ordering,
    RealPoint,
    finite_plus,
    germ_sign,
    real_point,
)
from .quadform import DiagonalForm, FieldTag

__all__ = [
    "Ordering",
    "PointValue",
    "SignSection",
    "beta",
    "d_re",
    "sign_infty_normalize",
    "signature",
    "transfer_section",
]


class _Key:
    """Sort wrapper so RealAlg lists can be bisected."""

    __slots__ = ("a",)

    def __init__(self, a: RealAlg):
        self.a = a

    def __lt__(self, other: "_Key") -> bool:
        return compare(self.a, other.a) < 0


@dataclass(frozen=True, eq=False)
class SignSection:
    breakpoints: tuple = ()
    values: tuple = (0,)
    twist: str | None = None

    def __post_init__(self):
        bps = tuple(self.breakpoints)
        vals = tuple(int(v) for v in self.values)
        if len(vals) != len(bps) + 1:
            raise ValueError(f"{len(bps)} breakpoints need {len(bps) + 1} values, got {len(vals)}")
        for a, b in zip(bps, bps[1:]):
            if compare(a, b) >= 0:
                raise ValueError("breakpoints must be strictly increasing")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)

    @classmethod
    def constant(cls, v: int, twist: str | None = None) -> "SignSection":
        return cls((), (v,), twist)

    def canonicalize(self) -> "SignSection":
        bps, vals = [], [self.values[0]]
        for a, v in zip(self.breakpoints, self.values[1:]):
            if v != vals[-1]:
                bps.append(a)
                vals.append(v)
        return SignSection(tuple(bps), tuple(vals), self.twist)

    def _index(self, P: Ordering) -> int:
        if P.kind == "-inf":
            return 0
        if P.kind == "+inf":
            return len(self.values) - 1
        if P.kind == "R":
            if self.breakpoints:
                raise MalformedPoint("a section over R has no breakpoints")
            return 0
        keys = [_Key(a) for a in self.breakpoints]
        k = _Key(P.alpha)
        return bisect_right(keys, k) if P.kind == "+" else bisect_left(keys, k)

    def __call__(self, P: Ordering) -> int:
        return self.values[self._index(P)]

    def refine(self, extra: Iterable[RealAlg]) -> "SignSection":
        """Same section with the breakpoints ``extra`` added."""
        pts = {a: None for a in self.breakpoints}
        for a in extra:
            pts.setdefault(a, None)
        bps = sorted(pts, key=cmp_to_key(compare))
        vals = [self(MINUS_INFINITY)] + [self(finite_plus(a)) for a in bps]
        return SignSection(tuple(bps), tuple(vals), self.twist)

    def _combine(self, other: "SignSection", op) -> "SignSection":
        a = self.refine(other.breakpoints)
        b = other.refine(self.breakpoints)
        return SignSection(a.breakpoints, tuple(op(x, y) for x, y in zip(a.values, b.values)), self.twist)

    def __add__(self, other: "SignSection") -> "SignSection":
        return self._combine(other, lambda x, y: x + y)

    def __sub__(self, other: "SignSection") -> "SignSection":
        return self._combine(other, lambda x, y: x - y)

    def __neg__(self) -> "SignSection":
        return SignSection(self.breakpoints, tuple(-v for v in self.values), self.twist)

    def scale(self, c: int) -> "SignSection":
        return SignSection(self.breakpoints, tuple(c * v for v in self.values), self.twist)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignSection):
            return NotImplemented
        a, b = self.canonicalize(), other.canonicalize()
        return a.values == b.values and a.breakpoints == b.breakpoints

    def __hash__(self) -> int:
        c = self.canonicalize()
        return hash((c.breakpoints, c.values))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def __str__(self) -> str:
        bps = ", ".join(repr(a) for a in self.breakpoints)
        vals = ", ".join(str(v) for v in self.values)
        tw = f"@twist({self.twist})" if self.twist else ""
        return f"section{{ bps=[{bps}], vals=[{vals}] }}{tw}"

    __repr__ = __str__


@dataclass(frozen=True)
class PointValue:
    """An element of C(k(x)_r, Z) at a closed point: an integer, or Z/2 at complex points."""

    point: ClosedPoint
    value: int
    twist: str | None = None

    def __post_init__(self):
        if isinstance(self.point, ComplexPoint):
            object.__setattr__(self, "value", self.value % 2)

    def __str__(self) -> str:
        tw = f" (x) {self.twist}" if self.twist else ""
        return f"{self.value}{tw} at {self.point}"


def _entry_breakpoints(f: DiagonalForm) -> list[RealAlg]:
    roots: dict[RealAlg, None] = {}
    for a in f.entries:
        for p in (a.num, a.den):
            if p.degree > 0:
                for r in sturm_isolate(p):
                    roots.setdefault(r, None)
    return sorted(roots, key=cmp_to_key(compare))


def signature(f: DiagonalForm, s: str | None = None) -> SignSection:
    """The signature of ``f`` as a section, labelled by the trivialization ``s``."""
    twist = s if s is not None else f.twist
    if f.field is FieldTag.COMPLEX:
        return SignSection.constant(0, twist)
    if f.field is FieldTag.REAL:
        return SignSection.constant(sum(1 if a > 0 else -1 for a in f.entries), twist)
    bps = _entry_breakpoints(f)
    orderings = [MINUS_INFINITY] + [finite_plus(a) for a in bps]
    vals = [sum(germ_sign(a, P) for a in f.entries) for P in orderings]
    return SignSection(tuple(bps), tuple(vals), twist)


def _as_alg(alpha) -> RealAlg:
    if isinstance(alpha, RealPoint):
        return alpha.alpha
    return real_point(alpha).alpha


def beta(s: SignSection, alpha, unit: RatFunc | None = None) -> PointValue:
    """Twisted residue ``s(xi_+) - s(xi_-)`` for the uniformizer ``unit * (t - alpha)``."""
    a = _as_alg(alpha)
    x = RealPoint(a)
    v = s(finite_plus(a)) - s(Ordering("-", a))
    if unit is None:
        return PointValue(x, v, f"({x.uniformizer})^*")
    u = unit.sign_at_real(a)
    if u == 0:
        raise MalformedPoint("uniformizer change must be a unit at the point")
    return PointValue(x, u * v, f"(({unit})*({x.uniformizer}))^*")


def beta_infinity(s: SignSection, d: int = 0) -> PointValue:
    """Residue at infinity on P^1 for the twist O(d), uniformizer ``1/t``.

    A section in the affine trivialization reads ``-s * t^d`` in the chart at
    infinity (the sign from ``dt = -t^2 d(1/t)``), and ``xi_+`` is ``+inf``.
    """
    v = -s(PLUS_INFINITY) + (-1) ** (d % 2) * s(MINUS_INFINITY)
    return PointValue(INF, v, "(1/t)^*")


def transfer_section(v: PointValue, x: ClosedPoint | None = None) -> PointValue:
    """Sum over the orderings extending the one of R: identity at real points, 0 at complex ones."""
    x = v.point if x is None else x
    if isinstance(x, ComplexPoint):
        return PointValue(x, 0, "R")
    return PointValue(x, v.value, v.twist)


def d_re(s: SignSection, support: Sequence[ClosedPoint], d: int = 0) -> list[PointValue]:
    """Differential of the sign-section complex: ``beta`` followed by transfer at each point."""
    real = {x.alpha for x in support if isinstance(x, RealPoint)}
    for a in s.canonicalize().breakpoints:
        if a not in real:
            raise SupportTooSmall(f"SupportTooSmall: breakpoint {a!r} is not in the support")
    out = []
    for x in support:
        if isinstance(x, RealPoint):
            out.append(transfer_section(beta(s, x.alpha)))
        elif isinstance(x, ComplexPoint):
            out.append(transfer_section(PointValue(x, 0), x))
        elif isinstance(x, Infinity):
            out.append(beta_infinity(s, d))
        else:
            raise MalformedPoint(f"not a closed point: {x!r}")
    return out


def _divide(v: int, q: int) -> int:
    if v % q:
        raise NotInIj(f"NotInIj: value {v} is not divisible by {q}")
    return v // q


def sign_infty_normalize(c, j: int):
    """Divide sign data by ``2**j``: sections, point values, lists of them, or integers."""
    q = 2 ** j
    if isinstance(c, SignSection):
        return SignSection(c.breakpoints, tuple(_divide(v, q) for v in c.values), c.twist)
    if isinstance(c, PointValue):
        if isinstance(c.point, ComplexPoint):
            return c
        return PointValue(c.point, _divide(c.value, q), c.twist)
    if isinstance(c, (list, tuple)):
        return type(c)(sign_infty_normalize(x, j) for x in c)
    if isinstance(c, dict):
        return {k: sign_infty_normalize(v, j) for k, v in c.items()}
    return _divide(int(c), q)
