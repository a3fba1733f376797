"""Gersten complexes of real curves with Witt and I^j coefficients.

Curves are ``P1``, ``A1`` and ``A1`` minus finitely many closed points.  A
cochain of degree 0 is a diagonal form over R(t) with entries in Q(t); a
cochain of degree 1 assigns to finitely many closed points an integer (the
signature of the residue class, W(R) = Z) or a parity (W(C) = Z/2).

Conventions:

* ``level`` is the index j of the complex ``C(X, I^j)``; its degree-1 values
  live in ``I^{j-1}`` of the residue fields.
* On P1 the twist is ``O(d)`` and only ``d mod 2`` matters.  A form given in
  the affine trivialization is read as ``-a * t^d`` in the chart at infinity
  (the sign comes from ``dt = -t^2 d(1/t)``), with uniformizer ``1/t``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

from .cellular.lattice import FinAbGroup, Subquotient, kernel, standard, transpose
from .errors import (
    DegenerateSubstitution,
    DoubleTwist,
    FieldMismatch,
    MalformedPoint,
    NonTransverse,
    NotACocycle,
    NotInIj,
    TwistMismatch,
)
from .exactnum import Poly, RatFunc, RealAlg, compare, rational_between, sign, sign_at, sturm_isolate
from .points import (
    INF,
    MINUS_INFINITY,
    ClosedPoint,
    ComplexPoint,
    Infinity,
    RealPoint,
    finite_plus,
    point_sort_key,
    real_point,
)
from .quadform import (
    DiagonalForm,
    FieldTag,
    IPowerCertificate,
    Refusal,
    WittClass,
    in_I_power,
    second_residue,
    support,
    tensor,
)
from .realspec import SignSection, d_re, sign_infty_normalize, signature

# -- curves ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class CurveSpec:
    kind: str
    removed: tuple = ()

    def __post_init__(self):
        if self.kind not in ("P1", "A1", "A1minus"):
            raise MalformedPoint(f"unknown curve kind {self.kind!r}")
        pts = tuple(sorted(self.removed, key=point_sort_key))
        if self.kind != "A1minus" and pts:
            raise MalformedPoint("only A1minus removes points")
        if any(isinstance(x, Infinity) for x in pts):
            raise MalformedPoint("infinity is not a point of A1")
        if len(set(pts)) != len(pts):
            raise MalformedPoint("removed points must be distinct")
        object.__setattr__(self, "removed", pts)

    @classmethod
    def P1(cls) -> "CurveSpec":
        return cls("P1")

    @classmethod
    def A1(cls) -> "CurveSpec":
        return cls("A1")

    @classmethod
    def A1minus(cls, points) -> "CurveSpec":
        return cls("A1minus", tuple(p if not isinstance(p, (int, Fraction, RealAlg)) else real_point(p) for p in points))

    @property
    def projective(self) -> bool:
        return self.kind == "P1"

    def contains(self, x: ClosedPoint) -> bool:
        if isinstance(x, Infinity):
            return self.projective
        return x not in self.removed

    def real_removed(self) -> list[RealAlg]:
        return [x.alpha for x in self.removed if isinstance(x, RealPoint)]

    def check_twist(self, d: int) -> None:
        if not self.projective and d % 2:
            raise TwistMismatch("affine curves only carry the trivial twist")

    def __str__(self) -> str:
        if self.kind == "A1minus":
            return "A1 minus {" + ", ".join(str(x) for x in self.removed) + "}"
        return self.kind


# -- cochains -------------------------------------------------------------------------------


def _as_ratfunc_form(f: DiagonalForm) -> DiagonalForm:
    if f.field is FieldTag.RATFUNC:
        return f
    if f.field is FieldTag.COMPLEX:
        raise FieldMismatch("degree-0 cochains are forms over R(t)")
    return DiagonalForm(FieldTag.RATFUNC, tuple(RatFunc(a) for a in f.entries), f.twist)


def _normalize_values(values) -> tuple:
    acc: dict = {}
    items = values.items() if isinstance(values, dict) else values
    for x, v in items:
        if isinstance(x, (int, Fraction, RealAlg)):
            x = real_point(x)
        if isinstance(v, WittClass):
            v = v.value
        acc[x] = acc.get(x, 0) + int(v)
    out = []
    for x, v in acc.items():
        if isinstance(x, ComplexPoint):
            v %= 2
        if v:
            out.append((x, v))
    return tuple(sorted(out, key=lambda xv: point_sort_key(xv[0])))


@dataclass(frozen=True)
class GerstenCochain:
    degree: int
    level: int = 0
    twist: int = 0
    form: DiagonalForm | None = None
    values: tuple = ()
    certificate: IPowerCertificate | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.degree not in (0, 1):
            raise ValueError("curve cochains live in degree 0 or 1")
        if self.level < 0:
            raise ValueError("level must be nonnegative")
        if self.degree == 0:
            f = self.form if self.form is not None else DiagonalForm(FieldTag.RATFUNC)
            object.__setattr__(self, "form", _as_ratfunc_form(f))
            if self.values:
                raise ValueError("degree-0 cochains carry a form, not point values")
            if self.certificate is not None:
                if self.certificate.level < self.level or not self.certificate.validates(self.form):
                    raise NotInIj("NotInIj: certificate does not validate")
        else:
            if self.form is not None:
                raise ValueError("degree-1 cochains carry point values, not a form")
            vals = _normalize_values(self.values)
            object.__setattr__(self, "values", vals)
            q = 2 ** (self.level - 1) if self.level >= 1 else 1
            for x, v in vals:
                if isinstance(x, ComplexPoint) and self.level >= 2:
                    raise NotInIj(f"NotInIj: nonzero value at {x} is not in I^{self.level - 1}(C) = 0")
                if isinstance(x, (RealPoint, Infinity)) and v % q:
                    raise NotInIj(f"NotInIj: value {v} at {x} is not in I^{self.level - 1}(R)")

    # constructors
    @classmethod
    def of_form(cls, f: DiagonalForm, level: int = 0, twist: int = 0, certify: bool = True) -> "GerstenCochain":
        f = _as_ratfunc_form(f)
        cert = None
        if certify and level > 0:
            res = in_I_power(f, level)
            if isinstance(res, Refusal):
                if res.reason != "Unknown":
                    raise NotInIj(f"NotInIj: {res}")
            else:
                cert = res
        return cls(0, level, twist, f, certificate=cert)

    @classmethod
    def of_values(cls, values, level: int = 0, twist: int = 0) -> "GerstenCochain":
        return cls(1, level, twist, values=values)

    @classmethod
    def zero(cls, degree: int, level: int = 0, twist: int = 0) -> "GerstenCochain":
        return cls(degree, level, twist)

    # accessors
    def value_at(self, x) -> int:
        if isinstance(x, (int, Fraction, RealAlg)):
            x = real_point(x)
        for y, v in self.values:
            if y == x:
                return v
        return 0

    @property
    def support(self) -> list[ClosedPoint]:
        return [x for x, _ in self.values]

    def is_zero(self) -> bool:
        if self.degree == 1:
            return not self.values
        return not self.form.entries

    def _check_compatible(self, other: "GerstenCochain") -> None:
        if self.degree != other.degree:
            raise ValueError("cochains of different degrees")
        if (self.twist - other.twist) % 2:
            raise TwistMismatch("cochains with different twists")

    def __add__(self, other: "GerstenCochain") -> "GerstenCochain":
        self._check_compatible(other)
        lvl = min(self.level, other.level)
        if self.degree == 0:
            f = DiagonalForm(FieldTag.RATFUNC, self.form.entries + other.form.entries)
            return GerstenCochain(0, lvl, self.twist, f)
        return GerstenCochain(1, lvl, self.twist, values=self.values + other.values)

    def __neg__(self) -> "GerstenCochain":
        if self.degree == 0:
            return GerstenCochain(0, self.level, self.twist, -self.form)
        return GerstenCochain(1, self.level, self.twist, values=tuple((x, -v) for x, v in self.values))

    def __sub__(self, other: "GerstenCochain") -> "GerstenCochain":
        return self + (-other)

    def scale(self, n: int) -> "GerstenCochain":
        if self.degree == 1:
            return GerstenCochain(1, self.level, self.twist, values=tuple((x, n * v) for x, v in self.values))
        out = GerstenCochain.zero(0, self.level, self.twist)
        for _ in range(abs(n)):
            out = out + (self if n > 0 else -self)
        return out

    def with_level(self, level: int) -> "GerstenCochain":
        if self.degree == 1:
            return GerstenCochain(1, level, self.twist, values=self.values)
        return GerstenCochain.of_form(self.form, level, self.twist)

    def __str__(self) -> str:
        head = f"deg {self.degree}, level {self.level}, O({self.twist})"
        if self.degree == 0:
            return f"[{head}] {self.form}"
        body = ", ".join(f"{x}: {v}" for x, v in self.values) or "0"
        return f"[{head}] {{{body}}}"

    # JSON
    def to_json(self) -> dict:
        if self.degree == 0:
            payload = str(self.form)
        else:
            payload = [{"point": str(x), "value": v} for x, v in self.values]
        return {"degree": self.degree, "level": self.level, "twist": self.twist, "payload": payload}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "GerstenCochain":
        from .literals import parse_form, parse_point

        if isinstance(data, str):
            data = json.loads(data)
        deg, lvl, tw = int(data["degree"]), int(data.get("level", 0)), int(data.get("twist", 0))
        payload = data["payload"]
        if deg == 0:
            f = parse_form(payload, FieldTag.RATFUNC)
            return cls.of_form(f, lvl, tw)
        vals = [(parse_point(item["point"]), int(item["value"])) for item in payload]
        return cls(1, lvl, tw, values=vals)


# -- residues ---------------------------------------------------------------------------------


def chart_at_infinity(f: DiagonalForm, d: int) -> DiagonalForm:
    """The form read in the chart at infinity: ``a -> -a * t^d``."""
    td = RatFunc(Poly.t()) ** d
    return DiagonalForm(FieldTag.RATFUNC, tuple(-a * td for a in f.entries))


def residue(f: DiagonalForm, x: ClosedPoint, d: int = 0) -> int:
    """Signature (or parity) of the second residue of ``f`` at ``x``."""
    if isinstance(x, Infinity):
        return second_residue(chart_at_infinity(f, d), INF).value
    return second_residue(f, x).value


def _points_for(f: DiagonalForm, X: CurveSpec) -> list[ClosedPoint]:
    pts = [x for x in support(f) if X.contains(x)]
    if X.projective:
        pts.append(INF)
    return pts


def d0(c: GerstenCochain, X: CurveSpec) -> GerstenCochain:
    """Residues at every closed point of ``X``; the level (complex index) is kept."""
    if c.degree != 0:
        raise ValueError("d0 takes a degree-0 cochain")
    X.check_twist(c.twist)
    vals = [(x, residue(c.form, x, c.twist)) for x in _points_for(c.form, X)]
    return GerstenCochain(1, c.level, c.twist, values=vals)


def is_cocycle(c: GerstenCochain, X: CurveSpec) -> bool:
    if c.degree == 1:
        return True
    return d0(c, X).is_zero()


def total_transfer(c: GerstenCochain) -> int:
    """Sum of the values at real points (complex points transfer to 0)."""
    return sum(v for x, v in c.values if not isinstance(x, ComplexPoint))


def boundary_localization(c: GerstenCochain, Z, X: CurveSpec | None = None) -> GerstenCochain:
    """Residues of a degree-0 class on ``X - Z`` at the points of ``Z``."""
    if c.degree != 0:
        raise ValueError("boundary_localization takes a degree-0 cochain")
    pts = [real_point(z) if isinstance(z, (int, Fraction, RealAlg)) else z for z in Z]
    return GerstenCochain(1, c.level, c.twist, values=[(x, residue(c.form, x, c.twist)) for x in pts])


# -- coboundaries --------------------------------------------------------------------------------


def is_coboundary(c: GerstenCochain, X: CurveSpec, construct: bool = True) -> tuple[bool, GerstenCochain | None]:
    """Decide whether a degree-1 cochain is a coboundary and, when possible, return a preimage.

    A preimage with entries in Q(t) needs, for every Q-irreducible factor, the
    same parity at all of its closed points; otherwise the answer is returned
    without a preimage.
    """
    if c.degree != 1:
        raise ValueError("is_coboundary takes a degree-1 cochain")
    X.check_twist(c.twist)
    for x in c.support:
        if not X.contains(x):
            raise MalformedPoint(f"{x} is not a point of {X}")
    j = c.level
    if X.projective:
        total = total_transfer(c)
        if c.twist % 2 == 0:
            ok = total == 0
        else:
            ok = j <= 0 or (total // 2 ** (j - 1)) % 2 == 0
    else:
        ok = True
    if not ok:
        return False, None
    if not c.values:
        return True, GerstenCochain.zero(0, j, c.twist)
    if not construct:
        return True, None
    pre = _preimage(c, X)
    return True, pre


def _preimage(c: GerstenCochain, X: CurveSpec) -> GerstenCochain | None:
    j, d = c.level, c.twist
    if j >= 2:
        q = 2 ** (j - 1)
        target = {x: v // q for x, v in c.values}
    else:
        target = dict(c.values)
    phi = _witt_preimage(target, X, d)
    if phi is None:
        return None
    if j >= 1 and phi.rank % 2:
        if X.projective and d % 2:
            return None
        phi = DiagonalForm(FieldTag.RATFUNC, phi.entries + (RatFunc(1),))
    if j >= 2:
        phi = tensor(DiagonalForm(FieldTag.RATFUNC, (RatFunc(1),) * 2 ** (j - 1)), phi)
    out = GerstenCochain.of_form(phi, j, d)
    return out if d0(out, X) == c else None


def _avoiding_rational(lo, hi, bad: list[Poly]) -> Fraction:
    """A rational strictly between ``lo`` and ``hi`` that is not a root of any of ``bad``."""
    c = rational_between(lo, hi)
    while any(p(c) == 0 for p in bad):
        c = rational_between(c, hi)
    return c


def _witt_preimage(target: dict, X: CurveSpec, d: int) -> DiagonalForm | None:
    by_factor: dict = {}
    inf_target = 0
    for x, v in target.items():
        if isinstance(x, Infinity):
            inf_target = v
        else:
            by_factor.setdefault(x.factor, {})[x] = v
    factors = sorted(by_factor, key=lambda p: (p.degree, p.coeffs))
    entries: list[RatFunc] = []
    separators: set[Fraction] = set()
    for p in factors:
        vals = by_factor[p]
        roots = sturm_isolate(p)
        real_vals = [vals.get(RealPoint(a), 0) for a in roots]
        parities = {v % 2 for v in real_vals}
        if len(roots) < p.degree:
            parities.add(vals.get(ComplexPoint(p), 0) % 2)
        if len(parities) > 1:
            return None
        odd = parities.pop()
        P = RatFunc(p)
        dp = p.derivative()
        sig = [sign_at(dp, a) for a in roots]
        rest = list(real_vals)
        if odd:
            entries.append(P)
            rest = [v - s for v, s in zip(rest, sig)]
        for k, (a, w) in enumerate(zip(roots, rest)):
            if not w:
                continue
            m = w // 2
            lo_bound = roots[k - 1] if k else a.lo - 1
            hi_bound = roots[k + 1] if k + 1 < len(roots) else a.hi + 1
            lo = _avoiding_rational(lo_bound, a, factors)
            hi = _avoiding_rational(a, hi_bound, factors)
            separators.update((lo, hi))
            eps = sign(m) * sig[k]
            bump = RatFunc(Poly.linear_root(lo) * Poly.linear_root(hi))
            for _ in range(abs(m)):
                entries += [P * eps, -P * bump * eps]
    phi = DiagonalForm(FieldTag.RATFUNC, tuple(entries))
    for s in sorted(separators):
        r = residue(phi, real_point(s)) if entries else 0
        if r:
            e = RatFunc(Poly.linear_root(s)) * (-sign(r))
            entries += [e] * abs(r)
    if X.projective:
        phi = DiagonalForm(FieldTag.RATFUNC, tuple(entries))
        cur = residue(phi, INF, d)
        delta = inf_target - cur
        if delta and d % 2 == 0:
            return None
        entries += [RatFunc(-sign(delta))] * abs(delta)
    return DiagonalForm(FieldTag.RATFUNC, tuple(entries))


# -- pushforward, Euler class --------------------------------------------------------------------


def pushforward_point(x, v, X: CurveSpec | None = None, level: int = 0, twist: int = 0) -> GerstenCochain:
    """The class ``v in I^level(k(x))`` supported at ``x``, as a cochain of level ``level + 1``."""
    if isinstance(x, (int, Fraction, RealAlg)):
        x = real_point(x)
    if X is not None and not X.contains(x):
        raise MalformedPoint(f"{x} is not a point of {X}")
    if isinstance(v, DiagonalForm):
        from .quadform import witt_class

        v = witt_class(v)
    if isinstance(v, WittClass):
        want = FieldTag.COMPLEX if isinstance(x, ComplexPoint) else FieldTag.REAL
        if v.field is not want:
            raise FieldMismatch(f"a class over {v.field.value} cannot sit at {x}")
        v = v.value
    return GerstenCochain(1, level + 1, twist, values=[(x, int(v))])


def euler_O(d: int) -> GerstenCochain:
    """Euler class of O(d) on P1: ``|d|`` simple zeros at ``0, 1, ...`` with alternating residues."""
    n = abs(d)
    vals = [(real_point(k), (-1) ** (n - 1 - k)) for k in range(n)]
    return GerstenCochain(1, 1, -d, values=vals)


# -- topology of the real locus ------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    lo: RealAlg | None = None
    hi: RealAlg | None = None
    circle: bool = False
    mobius: bool = False

    def __str__(self) -> str:
        if self.circle:
            return "S1 (Moebius)" if self.mobius else "S1"
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        return f"({lo}, {hi})"

    def contains(self, x) -> bool:
        if self.circle:
            return True
        a = x if isinstance(x, RealAlg) else RealAlg.rational(x)
        return (self.lo is None or compare(self.lo, a) < 0) and (self.hi is None or compare(a, self.hi) < 0)


@dataclass(frozen=True)
class RealLocus:
    components: tuple

    @classmethod
    def of(cls, X: CurveSpec, d: int = 0) -> "RealLocus":
        if X.projective:
            return cls((Component(circle=True, mobius=bool(d % 2)),))
        cuts = sorted(X.real_removed(), key=cmp_to_key(compare))
        bounds = [None] + cuts + [None]
        return cls(tuple(Component(bounds[k], bounds[k + 1]) for k in range(len(cuts) + 1)))

    def h(self, degree: int) -> list[FinAbGroup]:
        out = []
        for comp in self.components:
            if degree == 0:
                out.append(FinAbGroup(0) if comp.mobius else FinAbGroup(1))
            elif comp.circle:
                out.append(FinAbGroup(0, (2,)) if comp.mobius else FinAbGroup(1))
            else:
                out.append(FinAbGroup(0))
        return out


@dataclass(frozen=True)
class TopClass:
    """A class in ``H^degree(X(R), Z(L))``, one coordinate per component."""

    locus: RealLocus
    degree: int
    values: tuple

    def __post_init__(self):
        vals = []
        for comp, v in zip(self.locus.components, self.values):
            if self.degree == 0 and comp.mobius:
                v = 0
            elif self.degree == 1 and not comp.circle:
                v = 0
            elif self.degree == 1 and comp.mobius:
                v %= 2
            vals.append(int(v))
        object.__setattr__(self, "values", tuple(vals))

    def at(self, x) -> int:
        """Value of a degree-0 class on the component containing ``x``."""
        for comp, v in zip(self.locus.components, self.values):
            if comp.contains(x):
                return v
        raise MalformedPoint(f"{x} is not a real point of the curve")

    def mod2(self) -> tuple:
        return tuple(v % 2 for v in self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def __add__(self, other: "TopClass") -> "TopClass":
        return TopClass(self.locus, self.degree, tuple(a + b for a, b in zip(self.values, other.values)))

    def cup(self, other: "TopClass") -> "TopClass":
        if self.degree == 0:
            return TopClass(other.locus, other.degree, tuple(a * b for a, b in zip(self.values, other.values)))
        if other.degree == 0:
            return other.cup(self)
        return TopClass(self.locus, 2, tuple(0 for _ in self.values))

    def __str__(self) -> str:
        body = ", ".join(f"{c}: {v}" for c, v in zip(self.locus.components, self.values))
        return f"H^{self.degree}[{body}]"


def point_class(x: ClosedPoint, X: CurveSpec, d: int = 0) -> TopClass:
    """Topological class of the real points of ``x`` (empty for complex points)."""
    locus = RealLocus.of(X, d)
    vals = [0] * len(locus.components)
    if not isinstance(x, ComplexPoint):
        for k, comp in enumerate(locus.components):
            if comp.circle:
                vals[k] = 1
    return TopClass(locus, 1, tuple(vals))


def cycle_class(c: GerstenCochain, X: CurveSpec) -> TopClass:
    """Signature, normalized by ``2^-j`` (``2^-(j-1)`` on residues), read on the components of X(R)."""
    X.check_twist(c.twist)
    locus = RealLocus.of(X, c.twist)
    j = c.level
    if c.degree == 0:
        if not is_cocycle(c, X):
            raise NotACocycle("NotACocycle: the form ramifies on the curve")
        s = sign_infty_normalize(signature(c.form), j)
        vals = []
        for comp in locus.components:
            if comp.circle:
                vals.append(s(MINUS_INFINITY))
            else:
                vals.append(s(MINUS_INFINITY if comp.lo is None else finite_plus(comp.lo)))
        return TopClass(locus, 0, tuple(vals))
    total = 0
    for x, v in c.values:
        if isinstance(x, ComplexPoint):
            continue
        if j >= 1:
            q = 2 ** (j - 1)
            if v % q:
                raise NotInIj(f"NotInIj: {v} not divisible by {q}")
            total += v // q
        else:
            total += v * 2 ** (1 - j)
    vals = [total if comp.circle else 0 for comp in locus.components]
    return TopClass(locus, 1, tuple(vals))


# -- functoriality and products ------------------------------------------------------------------


def pullback_sub(c: GerstenCochain, f: RatFunc) -> GerstenCochain:
    """Substitute ``t -> f`` in every entry."""
    if c.degree != 0:
        raise ValueError("pullback_sub takes a degree-0 cochain")
    out = []
    for a in c.form.entries:
        try:
            b = a.compose(f)
        except ZeroDivisionError:
            raise DegenerateSubstitution(f"DegenerateSubstitution: {a} has a pole along t -> {f}") from None
        if b.is_zero():
            raise DegenerateSubstitution(f"DegenerateSubstitution: {a} vanishes along t -> {f}")
        out.append(b)
    return GerstenCochain.of_form(DiagonalForm(FieldTag.RATFUNC, tuple(out)), c.level, c.twist)


def _specialize(f: DiagonalForm, x: ClosedPoint, d: int) -> list[int]:
    """Signs of the entries at a real point (or ranks at a complex one); raises if some entry is not a unit."""
    out = []
    for a in f.entries:
        if isinstance(x, Infinity):
            b = a * RatFunc(Poly.t()) ** d
            k, s = b.infinity_unit_sign()
        elif isinstance(x, ComplexPoint):
            k, s = a.valuation_at(x.factor), 1
        else:
            k, s = a.local_unit_sign(x.alpha)
        if k:
            raise NonTransverse(f"NonTransverse: {a} is not a unit at {x}")
        out.append(s)
    return out


def cup(c0: GerstenCochain, c1: GerstenCochain, X: CurveSpec | None = None) -> GerstenCochain:
    """Products of cochains; the degree-0 factor acts on residues by specialization."""
    if c0.degree == 1 and c1.degree == 0:
        return cup(c1, c0, X)
    if c0.twist % 2 and c1.twist % 2:
        raise DoubleTwist("DoubleTwist: at most one factor may be twisted")
    d = c0.twist + c1.twist
    level = c0.level + c1.level
    if c0.degree == 0 and c1.degree == 0:
        return GerstenCochain(0, level, d, tensor(c0.form, c1.form))
    if c0.degree == 1:
        raise ValueError("the product of two degree-1 cochains vanishes on a curve")
    vals = []
    for x, v in c1.values:
        signs = _specialize(c0.form, x, c0.twist)
        vals.append((x, v * (len(signs) if isinstance(x, ComplexPoint) else sum(signs))))
    return GerstenCochain(1, level, d, values=vals)


# -- Borel-Haefliger side --------------------------------------------------------------------------


def residue_forms(c: GerstenCochain) -> dict:
    """Diagonal forms over the residue fields representing the values of a degree-1 cochain."""
    out = {}
    for x, v in c.values:
        if isinstance(x, ComplexPoint):
            out[x] = DiagonalForm(FieldTag.COMPLEX, (1,) * v)
        else:
            out[x] = DiagonalForm(FieldTag.REAL, (1 if v > 0 else -1,) * abs(v))
    return out


def cochain_from_forms(forms: dict, level: int = 1, twist: int = 0) -> GerstenCochain:
    from .quadform import witt_class

    return GerstenCochain(1, level, twist, values=[(x, witt_class(f).value) for x, f in forms.items()])


def borel_haefliger(forms: dict, X: CurveSpec, level: int = 1, twist: int = 0) -> tuple:
    """Mod-2 class of the cycle ``sum e(f_x) [x]`` on X(R), read from the forms alone.

    ``e`` is the rank mod 2 at level 1.  At higher levels it is the number of
    nonvanishing symbols ``(a_1) ... (a_k)`` in a Pfister certificate, i.e. the
    terms whose slots are all negative, mod 2.
    """
    locus = RealLocus.of(X, twist)
    count = 0
    for x, f in forms.items():
        if isinstance(x, ComplexPoint):
            continue  # the real locus of a complex point is empty
        if level <= 1:
            count += f.rank
        else:
            cert = in_I_power(f, level - 1)
            if not isinstance(cert, IPowerCertificate):
                raise NotInIj(f"NotInIj: {cert}")
            count += sum(all(a < 0 for a in slots) for _, slots in cert.terms)
    return tuple(count % 2 if comp.circle else 0 for comp in locus.components)


# -- the sign-section route ------------------------------------------------------------------------


def cohomology_groups(X: CurveSpec, d: int = 0, extra=(Fraction(-1), Fraction(0), Fraction(1))) -> tuple[FinAbGroup, FinAbGroup]:
    """``H^0`` and ``H^1`` of the sign-section complex of ``X`` with twist ``O(d)``.

    Sections are cut at the removed real points and at the rationals in
    ``extra``; the indicator sections of the resulting intervals span C^0 and
    the cut points of X(R) (plus infinity on P1) index C^1.
    """
    X.check_twist(d)
    cuts = {a: None for a in X.real_removed()}
    for e in extra:
        cuts.setdefault(RealAlg.rational(e), None)
    bps = sorted(cuts, key=cmp_to_key(compare))
    pts: list[ClosedPoint] = [RealPoint(a) for a in bps if X.contains(RealPoint(a))]
    if X.projective:
        pts.append(INF)
    cols = []
    for k in range(len(bps) + 1):
        s = SignSection(tuple(bps), tuple(int(i == k) for i in range(len(bps) + 1)))
        cols.append([pv.value for pv in d_re(s, pts + [RealPoint(a) for a in X.real_removed()], d)][: len(pts)])
    M = transpose(cols, len(pts))  # rows: points, columns: intervals
    n0, n1 = len(bps) + 1, len(pts)
    H0 = FinAbGroup(len(kernel(M, n0)) if n1 else n0)
    img = [tuple(c) for c in cols]
    H1 = Subquotient(standard(n1), img, n1).group if n1 else FinAbGroup(0)
    return H0, H1
