"""Diagonal quadratic forms and Witt classes over R, C and R(t).

Forms over R(t) have entries in Q(t).  Witt classes over R(t) are decided by
the classical residue splitting: second residues at every closed point of the
affine line together with the signature at the ordering ``+inf``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

from .errors import DoubleTwist, EmptySpectrum, FieldMismatch, MalformedPoint, TwistMismatch, ZeroEntry
from .exactnum import Poly, RatFunc, irreducible_factors, sign
from .points import (
    PLUS_INFINITY,
    ClosedPoint,
    ComplexPoint,
    Infinity,
    Ordering,
    RealPoint,
    germ_sign,
    points_of_factor,
    sorted_points,
)


class FieldTag(Enum):
    REAL = "R"
    COMPLEX = "C"
    RATFUNC = "R(t)"


Entry = Union[Fraction, RatFunc]


def _coerce_entry(tag: FieldTag, a) -> Entry:
    if tag is FieldTag.RATFUNC:
        a = RatFunc.coerce(a)
        if a.is_zero():
            raise ZeroEntry("forms have nonzero entries")
        return a
    if isinstance(a, RatFunc):
        if not a.is_constant():
            raise FieldMismatch(f"entry {a} is not a constant")
        a = a.constant_value()
    a = Fraction(a)
    if a == 0:
        raise ZeroEntry("forms have nonzero entries")
    return a


@dataclass(frozen=True)
class DiagonalForm:
    field: FieldTag
    entries: tuple = ()
    twist: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(_coerce_entry(self.field, a) for a in self.entries))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def scaled(self, c) -> "DiagonalForm":
        return DiagonalForm(self.field, tuple(a * c for a in self.entries), self.twist)

    def __neg__(self) -> "DiagonalForm":
        return self.scaled(-1)

    def __str__(self) -> str:
        body = "<" + ", ".join(str(a) for a in self.entries) + ">"
        return body + (f"@twist({self.twist})" if self.twist else "")


def form(entries: Iterable, field: FieldTag | None = None, twist: str | None = None) -> DiagonalForm:
    """Build a form, inferring R(t) when any entry is a nonconstant rational function."""
    entries = tuple(entries)
    if field is None:
        field = FieldTag.REAL
        for a in entries:
            if isinstance(a, RatFunc) and not a.is_constant():
                field = FieldTag.RATFUNC
    return DiagonalForm(field, entries, twist)


def zero_form(field: FieldTag, twist: str | None = None) -> DiagonalForm:
    return DiagonalForm(field, (), twist)


def dsum(f: DiagonalForm, g: DiagonalForm) -> DiagonalForm:
    if f.field is not g.field:
        raise FieldMismatch(f"cannot add forms over {f.field.value} and {g.field.value}")
    if f.twist != g.twist:
        raise TwistMismatch(f"cannot add forms twisted by {f.twist} and {g.twist}")
    return DiagonalForm(f.field, f.entries + g.entries, f.twist)


def tensor(f: DiagonalForm, g: DiagonalForm) -> DiagonalForm:
    if f.field is not g.field:
        raise FieldMismatch(f"cannot multiply forms over {f.field.value} and {g.field.value}")
    if f.twist and g.twist:
        raise DoubleTwist("DoubleTwist: at most one factor may be twisted")
    return DiagonalForm(f.field, tuple(a * b for a in f.entries for b in g.entries), f.twist or g.twist)


def pfister(a, field: FieldTag | None = None) -> DiagonalForm:
    """The 1-fold Pfister form <<a>> = <1, -a>."""
    if field is None:
        field = FieldTag.RATFUNC if isinstance(a, RatFunc) and not a.is_constant() else FieldTag.REAL
    a = _coerce_entry(field, a)
    return DiagonalForm(field, (1, -a))


def pfister_product(slots, unit=1, field: FieldTag = FieldTag.RATFUNC) -> DiagonalForm:
    """``unit * <<a_1, ..., a_j>>``."""
    f = DiagonalForm(field, (unit,))
    for a in slots:
        f = tensor(f, pfister(a, field))
    return f


def _entry_sign(field: FieldTag, a, P: Ordering) -> int:
    if field is FieldTag.RATFUNC:
        return germ_sign(a, P)
    return sign(a)


def signature_at(f: DiagonalForm, P: Ordering = PLUS_INFINITY) -> int:
    """Signature of ``f`` at an ordering (the twist is ignored)."""
    if f.field is FieldTag.COMPLEX:
        raise EmptySpectrum("EmptySpectrum: C has no orderings")
    if f.field is FieldTag.REAL and P.kind != "R" and P is not PLUS_INFINITY:
        raise MalformedPoint("R has a single ordering")
    return sum(_entry_sign(f.field, a, P) for a in f.entries)


# -- Witt classes -----------------------------------------------------------------


@dataclass(frozen=True)
class WittClass:
    """Canonical invariants of a Witt class.

    R: ``value`` is the signature.  C: ``value`` is the rank mod 2.
    R(t): ``residues`` lists the nonzero second residues (sorted by point) and
    ``value`` is the signature at ``+inf``.
    """

    field: FieldTag
    value: int = 0
    residues: tuple = ()
    twist: str | None = field(default=None, compare=False)

    def is_zero(self) -> bool:
        return self.value == 0 and not self.residues

    def residue_at(self, x: ClosedPoint) -> "WittClass":
        for p, c in self.residues:
            if p == x:
                return c
        return WittClass(residue_field(x))

    def __str__(self) -> str:
        if self.field is FieldTag.RATFUNC:
            res = ", ".join(f"{p}: {c}" for p, c in self.residues)
            return f"W[{self.value} at +inf; {res}]"
        tw = f" (x) {self.twist}" if self.twist else ""
        return f"{self.value}{tw}"


def residue_field(x: ClosedPoint) -> FieldTag:
    return FieldTag.COMPLEX if isinstance(x, ComplexPoint) else FieldTag.REAL


def _require_ratfunc(f: DiagonalForm) -> None:
    if f.field is not FieldTag.RATFUNC:
        raise FieldMismatch("second residues are defined for forms over R(t)")


def second_residue(f: DiagonalForm, x: ClosedPoint, unit: RatFunc | None = None) -> WittClass:
    """Milnor's second residue at ``x`` with uniformizer ``unit * pi_x``.

    ``pi_x`` is ``t - alpha`` at a real point, the factor at a complex bucket and
    ``1/t`` at infinity.  The result is labelled by the dual basis of the
    uniformizer used.
    """
    _require_ratfunc(f)
    if isinstance(x, ComplexPoint):
        parity = sum(1 for a in f.entries if a.valuation_at(x.factor) % 2) % 2
        return WittClass(FieldTag.COMPLEX, parity, twist=f"({x.uniformizer})^*")
    if isinstance(x, RealPoint):
        local = [a.local_unit_sign(x.alpha) for a in f.entries]
        usign = unit.sign_at_real(x.alpha) if unit is not None else 1
    elif isinstance(x, Infinity):
        local = [a.infinity_unit_sign() for a in f.entries]
        usign = unit.infinity_unit_sign()[1] if unit is not None else 1
        if unit is not None and unit.valuation_at_infinity() != 0:
            raise MalformedPoint("uniformizer change must be a unit at the point")
    else:
        raise MalformedPoint(f"not a closed point: {x!r}")
    if unit is not None and isinstance(x, RealPoint) and unit.valuation_at(x.alpha.minpoly) != 0:
        raise MalformedPoint("uniformizer change must be a unit at the point")
    value = sum(s * usign for k, s in local if k % 2)
    label = x.uniformizer if unit is None else f"({unit})*({x.uniformizer})"
    return WittClass(FieldTag.REAL, value, twist=f"({label})^*")


def change_basis(c: WittClass, x: ClosedPoint, unit: RatFunc) -> WittClass:
    """Rewrite a class in basis ``pi^*`` into basis ``(unit*pi)^*``: ``<a> pi^* = <a*unit(x)> (unit*pi)^*``."""
    if c.field is FieldTag.COMPLEX:
        return c
    if isinstance(x, RealPoint):
        s = unit.sign_at_real(x.alpha)
    else:
        s = unit.infinity_unit_sign()[1]
    return WittClass(c.field, c.value * s, twist=f"(({unit})*({x.uniformizer}))^*")


def transfer_point(c: WittClass, x: ClosedPoint) -> WittClass:
    """Twisted transfer W(k(x)) -> W(R): identity for real points, zero from C."""
    if isinstance(x, ComplexPoint):
        return WittClass(FieldTag.REAL, 0)
    return WittClass(FieldTag.REAL, c.value, twist=c.twist)


def support(f: DiagonalForm) -> list[ClosedPoint]:
    """Closed points of A^1 where some entry has a zero or a pole."""
    _require_ratfunc(f)
    factors: set[Poly] = set()
    for a in f.entries:
        for p in (a.num, a.den):
            if p.degree > 0:
                factors.update(irreducible_factors(p))
    pts: list[ClosedPoint] = []
    for p in factors:
        pts.extend(points_of_factor(p))
    return sorted_points(pts)


def witt_class(f: DiagonalForm) -> WittClass:
    if f.field is FieldTag.REAL:
        return WittClass(FieldTag.REAL, signature_at(f, PLUS_INFINITY), twist=f.twist)
    if f.field is FieldTag.COMPLEX:
        return WittClass(FieldTag.COMPLEX, f.rank % 2, twist=f.twist)
    res = []
    for x in support(f):
        r = second_residue(f, x)
        if r.value:
            res.append((x, r))
    return WittClass(FieldTag.RATFUNC, signature_at(f, PLUS_INFINITY), tuple(res), twist=f.twist)


def witt_equal(f: DiagonalForm, g: DiagonalForm) -> bool:
    if f.field is not g.field:
        raise FieldMismatch("FieldMismatch: forms over different fields")
    return witt_class(dsum(f, -g)).is_zero()


# -- powers of the fundamental ideal -------------------------------------------------


@dataclass(frozen=True)
class IPowerCertificate:
    """``sum_k u_k <<a_k1, ..., a_kj>>`` witnessing membership in ``I^j``."""

    level: int
    field: FieldTag
    terms: tuple = ()
    twist: str | None = None

    def expand(self) -> DiagonalForm:
        out = zero_form(self.field)
        for unit, slots in self.terms:
            out = dsum(out, pfister_product(slots, unit, self.field))
        return DiagonalForm(self.field, out.entries, self.twist)

    def validates(self, f: DiagonalForm) -> bool:
        return all(len(s) == self.level for _, s in self.terms) and witt_equal(self.expand(), f)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for u, slots in self.terms:
            pf = "<<" + ", ".join(str(a) for a in slots) + ">>" if slots else "<1>"
            parts.append(pf if u == 1 else f"<{u}>{pf}")
        return " + ".join(parts)


@dataclass(frozen=True)
class Refusal:
    """Failure to certify membership; ``reason`` is a disproof kind or ``"Unknown"``."""

    reason: str
    witness: object = None

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"refused ({self.reason}: {self.witness})"


def _sample_orderings(f: DiagonalForm) -> list[Ordering]:
    from .points import MINUS_INFINITY, finite_minus, finite_plus

    out = [MINUS_INFINITY, PLUS_INFINITY]
    for x in support(f):
        if isinstance(x, RealPoint):
            out += [finite_minus(x.alpha), finite_plus(x.alpha)]
    return out


def _halve(entries: list) -> list | None:
    """Cancel hyperbolic pairs among square classes; return half if every class is doubled."""
    counts: dict[RatFunc, int] = {}
    for a in entries:
        k = a.square_class()
        neg = -k
        if counts.get(neg, 0) > 0:
            counts[neg] -= 1
        else:
            counts[k] = counts.get(k, 0) + 1
    half = []
    for k, n in counts.items():
        if n % 2:
            return None
        half += [k] * (n // 2)
    return half


def in_I_power(f: DiagonalForm, j: int) -> IPowerCertificate | Refusal:
    """Certify ``f in I^j`` or refuse, with a witness when a disproof is found."""
    if j <= 0:
        return IPowerCertificate(0, f.field, tuple((a, ()) for a in f.entries), f.twist)
    if f.rank % 2:
        return Refusal("OddRank", f.rank)
    if f.field is FieldTag.COMPLEX:
        return IPowerCertificate(j, f.field, (), f.twist)
    if f.field is FieldTag.REAL:
        sig = signature_at(f, PLUS_INFINITY)
        if sig % (2 ** j):
            return Refusal("Signature", ("R", sig))
    else:
        for P in _sample_orderings(f):
            s = signature_at(f, P)
            if s % (2 ** j):
                return Refusal("Signature", (str(P), s))
    if j == 1:
        e = f.entries
        terms = tuple((e[i], (-e[i] * e[i + 1],)) for i in range(0, len(e), 2))
        return IPowerCertificate(1, f.field, terms, f.twist)
    if f.field is FieldTag.REAL:
        m = signature_at(f, PLUS_INFINITY) // 2 ** j
        terms = tuple((Fraction(sign(m)), (Fraction(-1),) * j) for _ in range(abs(m)))
        return IPowerCertificate(j, f.field, terms, f.twist)
    # R(t), j >= 2: I^j is torsion free, so complex residues must vanish
    for x, r in witt_class(f).residues:
        if isinstance(x, ComplexPoint):
            return Refusal("TorsionResidue", str(x))
    half = _halve(list(f.entries))
    if half is None:
        return Refusal("Unknown")
    sub = in_I_power(DiagonalForm(f.field, tuple(half)), j - 1)
    if not isinstance(sub, IPowerCertificate):
        return Refusal("Unknown") if sub.reason != "Unknown" else sub
    minus_one = RatFunc(-1)
    terms = tuple((u, tuple(s) + (minus_one,)) for u, s in sub.terms)
    return IPowerCertificate(j, f.field, terms, f.twist)
