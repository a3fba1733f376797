"""Factorization of rational polynomials into monic Q-irreducible factors.

The pipeline is square-free decomposition (Yun), extraction of rational roots
(rational root theorem), then a splitting routine for the rootless square-free
remainder.  The splitting routine locates complex roots numerically and tries
conjugation-closed root subsets as factor candidates; every candidate is
confirmed by exact division, so numerics only ever guide the search.
Inputs of degree above ``MAX_DEGREE`` in the rootless part are rejected.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import isqrt

import mpmath

from ..errors import DegreeBoundExceeded, ZeroPolynomial
from .poly import Poly, poly_gcd

MAX_DEGREE = 16


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm; returns monic square-free, pairwise coprime ``(a_i, i)``."""
    if p.is_zero():
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    p = p.monic()
    if p.degree <= 0:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p: Poly) -> list[Fraction]:
    """All distinct rational roots of ``p`` (rational root theorem)."""
    _, q = p.primitive_integer()
    cs = [int(c) for c in q.coeffs]
    roots: set[Fraction] = set()
    # strip t-factors first so the constant term is nonzero
    k = 0
    while cs[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    cs = cs[k:]
    if len(cs) == 1:
        return sorted(roots)
    for num in _divisors(cs[0]):
        for den in _divisors(cs[-1]):
            for r in (Fraction(num, den), Fraction(-num, den)):
                if r not in roots and q(r) == 0:
                    roots.add(r)
    return sorted(roots)


def _split_rootless(p: Poly) -> list[Poly]:
    """Split a monic square-free polynomial without rational roots."""
    if p.degree <= 3:
        return [p]
    if p.degree > MAX_DEGREE:
        raise DegreeBoundExceeded(f"factorization supports degree <= {MAX_DEGREE}, got {p.degree}")
    _, q = p.primitive_integer()
    lc_divs = _divisors(int(q.lc))
    bits = max(int(abs(c)).bit_length() for c in q.coeffs)
    with mpmath.workdps(40 + 2 * bits + 4 * p.degree):
        roots = mpmath.polyroots([mpmath.mpf(int(c)) for c in reversed(q.coeffs)],
                                 maxsteps=400, extraprec=200)
        return _search(q, list(roots), lc_divs)


def _conj_index(roots, i):
    best, bi = None, i
    target = mpmath.conj(roots[i])
    for j, r in enumerate(roots):
        d = abs(r - target)
        if best is None or d < best:
            best, bi = d, j
    return bi


def _search(q: Poly, roots: list, lc_divs: list[int]) -> list[Poly]:
    n = len(roots)
    tol = mpmath.mpf(10) ** (-(mpmath.mp.dps // 3))
    for size in range(1, n // 2 + 1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if any(_conj_index(roots, i) not in s for i in subset):
                continue
            coeffs = [mpmath.mpc(1)]
            for i in subset:
                nxt = [mpmath.mpc(0)] * (len(coeffs) + 1)
                for k, c in enumerate(coeffs):
                    nxt[k + 1] += c
                    nxt[k] -= c * roots[i]
                coeffs = nxt
            for c in lc_divs:
                cand = []
                ok = True
                for a in coeffs:
                    v = a * c
                    r = mpmath.nint(v.real)
                    if abs(v - r) > tol:
                        ok = False
                        break
                    cand.append(int(r))
                if not ok:
                    continue
                g = Poly(cand)
                quo, rem = q.divmod(g)
                if rem.is_zero():
                    rest = [r for k, r in enumerate(roots) if k not in s]
                    return [g.monic()] + _search(quo, rest, _divisors(int(quo.primitive_integer()[1].lc)))
    return [q.monic()]


@lru_cache(maxsize=4096)
def factor_rational(p: Poly) -> tuple[tuple[Poly, int], ...]:
    """Monic Q-irreducible factors with multiplicities, ``p = c * prod f**m``."""
    if p.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    out: list[tuple[Poly, int]] = []
    for part, mult in squarefree_decomposition(p):
        rest = part
        for r in rational_roots(part):
            lin = Poly.linear_root(r)
            out.append((lin, mult))
            rest = rest.exact_div(lin)
        if rest.degree > 0:
            for f in _split_rootless(rest.monic()):
                out.append((f, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs, fm[1]))
    return tuple(out)


def irreducible_factors(p: Poly) -> tuple[Poly, ...]:
    """Distinct monic irreducible factors of ``p``."""
    return tuple(f for f, _ in factor_rational(p))


def valuation(p: Poly, f: Poly) -> int:
    """Largest ``k`` with ``f**k | p``; ``p`` nonzero."""
    k = 0
    q, r = p.divmod(f)
    while r.is_zero():
        k += 1
        p = q
        q, r = p.divmod(f)
    return k
