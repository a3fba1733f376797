"""Real algebraic numbers as (square-free polynomial, isolating interval).

Isolating intervals have dyadic endpoints that are never roots of the
defining polynomial, so every interval is open and sign changes are strict.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, lru_cache, total_ordering

from ..errors import ZeroPolynomial
from .factor import irreducible_factors
from .poly import Poly, poly_gcd, sign


def _dyadic_bound(p: Poly) -> Fraction:
    b = p.cauchy_bound()
    k = Fraction(1)
    while k <= b:
        k *= 2
    return k


def _split_point(p: Poly, lo: Fraction, hi: Fraction) -> Fraction:
    """A non-root of ``p`` strictly inside ``(lo, hi)``, as close to the midpoint as needed."""
    mid = (lo + hi) / 2
    if p(mid) != 0:
        return mid
    step = (hi - lo) / 4
    while True:
        for cand in (mid + step, mid - step):
            if p(cand) != 0:
                return cand
        step /= 2


@lru_cache(maxsize=4096)
def _isolate_squarefree(q: Poly) -> tuple[tuple[Fraction, Fraction], ...]:
    if q.degree <= 0:
        return ()
    bound = _dyadic_bound(q)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = q.count_roots(lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = _split_point(q, lo, hi)
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort()
    return tuple(out)


def sturm_isolate(p: Poly) -> list["RealAlg"]:
    """All distinct real roots of ``p`` in increasing order."""
    if p.is_zero():
        raise ZeroPolynomial("ZeroPolynomial: cannot isolate roots of 0")
    q = p.squarefree_part
    return [RealAlg(q, lo, hi) for lo, hi in _isolate_squarefree(q)]


@total_ordering
class RealAlg:
    """A real root of a square-free rational polynomial.

    Equality and hashing go through the canonical key (monic Q-irreducible
    minimal polynomial, index among its real roots), so the same number built
    from different defining polynomials or intervals compares equal.
    """

    __slots__ = ("defining", "lo", "hi", "__dict__")

    def __init__(self, defining: Poly, lo, hi):
        self.defining = defining
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)

    @classmethod
    def rational(cls, c) -> "RealAlg":
        c = Fraction(c)
        return cls(Poly.linear_root(c), c - 1, c + 1)

    def validate(self) -> None:
        d = self.defining
        if d.is_zero() or d.degree < 1:
            raise ValueError("defining polynomial must be nonconstant")
        if d != d.squarefree_part * d.lc:
            raise ValueError("defining polynomial must be square-free")
        if not self.lo < self.hi:
            raise ValueError("empty interval")
        if d(self.lo) == 0 or d(self.hi) == 0:
            raise ValueError("interval endpoint is a root")
        if d.count_roots(self.lo, self.hi) != 1:
            raise ValueError("interval does not isolate exactly one root")

    # -- refinement -------------------------------------------------------
    def refine(self) -> "RealAlg":
        d = self.defining
        mid = _split_point(d, self.lo, self.hi)
        if sign(d(self.lo)) != sign(d(mid)):
            return RealAlg(d, self.lo, mid)
        return RealAlg(d, mid, self.hi)

    def refined_to(self, width: Fraction) -> "RealAlg":
        a = self
        while a.hi - a.lo > width:
            a = a.refine()
        return a

    @cached_property
    def exact_rational(self) -> Fraction | None:
        if self.minpoly.degree == 1:
            return -self.minpoly[0]
        return None

    # -- canonical form -------------------------------------------------------
    @cached_property
    def minpoly(self) -> Poly:
        facs = irreducible_factors(self.defining)
        if len(facs) == 1:
            return facs[0]
        # the interval isolates one root of the defining polynomial, so exactly one factor vanishes in it
        (hit,) = [f for f in facs if f.count_roots(self.lo, self.hi) > 0]
        return hit

    @cached_property
    def index(self) -> int:
        """Position among the real roots of the minimal polynomial (0-based)."""
        m = self.minpoly
        bound = _dyadic_bound(m)
        return m.count_roots(-bound, self.lo)

    @cached_property
    def key(self) -> tuple:
        return (self.minpoly.coeffs, self.index)

    def canonical(self) -> "RealAlg":
        """The isolating interval produced by ``sturm_isolate(minpoly)``."""
        return _canonical_root(self.minpoly, self.index)

    def __eq__(self, other) -> bool:
        if isinstance(other, RealAlg):
            return self.key == other.key
        if isinstance(other, (int, Fraction)):
            return self.exact_rational == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other) -> bool:
        return compare(self, other) < 0

    def __repr__(self) -> str:
        c = self.canonical()
        return f"root({c.defining}, {c.lo}, {c.hi})"

    def __str__(self) -> str:
        r = self.exact_rational
        return str(r) if r is not None else repr(self)

    def approx(self, digits: int = 12) -> float:
        a = self.refined_to(Fraction(1, 10 ** digits))
        return float((a.lo + a.hi) / 2)


@lru_cache(maxsize=4096)
def _canonical_root(m: Poly, index: int) -> RealAlg:
    return sturm_isolate(m)[index]


def compare(a: RealAlg, b) -> int:
    """Exact three-way comparison of a real algebraic number with another or a rational."""
    if isinstance(b, (int, Fraction)):
        return _cmp_rational(a, Fraction(b))
    if a.key == b.key:
        return 0
    while not (a.hi <= b.lo or b.hi <= a.lo):
        if a.hi - a.lo >= b.hi - b.lo:
            a = a.refine()
        else:
            b = b.refine()
    return -1 if a.hi <= b.lo else 1


def _cmp_rational(a: RealAlg, r: Fraction) -> int:
    if a.defining(r) == 0 and a.lo < r < a.hi:
        return 0
    while a.lo < r < a.hi:
        a = a.refine()
    return -1 if a.hi <= r else 1


def sign_at(p: Poly, alpha: RealAlg) -> int:
    """Exact sign of ``p(alpha)``: gcd test for zero, then interval refinement."""
    if p.is_zero():
        return 0
    if p.degree == 0:
        return sign(p.lc)
    g = poly_gcd(p, alpha.defining)
    if g.degree > 0 and g.count_roots(alpha.lo, alpha.hi) == 1:
        return 0
    q = p.squarefree_part
    a = alpha
    while q(a.lo) == 0 or q.count_roots(a.lo, a.hi) > 0:
        a = a.refine()
    return sign(p(a.lo))


def rational_between(a, b) -> Fraction:
    """A rational strictly between two distinct reals (RealAlg or rational), ``a < b``."""
    if isinstance(a, RealAlg):
        r = a.exact_rational
        if r is not None:
            a = r
    if isinstance(b, RealAlg):
        r = b.exact_rational
        if r is not None:
            b = r
    if not isinstance(a, RealAlg) and not isinstance(b, RealAlg):
        return (Fraction(a) + Fraction(b)) / 2
    if not isinstance(a, RealAlg):
        while b.lo <= a:
            b = b.refine()
        return (Fraction(a) + b.lo) / 2
    if not isinstance(b, RealAlg):
        while a.hi >= b:
            a = a.refine()
        return (a.hi + Fraction(b)) / 2
    while a.hi > b.lo:
        if a.hi - a.lo >= b.hi - b.lo:
            a = a.refine()
        else:
            b = b.refine()
    return (a.hi + b.lo) / 2
