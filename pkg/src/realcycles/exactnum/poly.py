"""Dense univariate polynomials over Q in the variable ``t``."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Union

from ..errors import ZeroPolynomial

Number = Union[int, Fraction]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    """Immutable polynomial with rational coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "__dict__")

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls([c])

    @classmethod
    def t(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def linear_root(cls, c: Number) -> "Poly":
        """Return ``t - c``."""
        return cls([-_frac(c), 1])

    # -- basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "Poly":
        return x if isinstance(x, Poly) else Poly.const(x)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lc = other.lc
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other) -> "Poly":
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other) -> "Poly":
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def divides(self, other: "Poly") -> bool:
        return not (other % self)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def homogenized_compose(self, num: "Poly", den: "Poly", degree: int | None = None) -> "Poly":
        """Return ``den**n * self(num/den)`` where ``n`` defaults to ``self.degree``."""
        n = self.degree if degree is None else degree
        acc = Poly()
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + (num ** i) * (den ** (n - i)) * c
        return acc

    def reverse(self, n: int | None = None) -> "Poly":
        """Return ``t**n * self(1/t)``."""
        n = self.degree if n is None else n
        cs = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return Poly(reversed(cs[: n + 1]))

    def scale_var(self, c: Number) -> "Poly":
        """Return ``self(c*t)``."""
        c = _frac(c)
        return Poly(a * c ** i for i, a in enumerate(self.coeffs))

    # -- integer content ----------------------------------------------------
    def primitive_integer(self) -> tuple[Fraction, "Poly"]:
        """Split ``self = c * q`` with ``q`` a primitive integer polynomial, ``lc(q) > 0``."""
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no content")
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), Poly(v // g for v in ints)

    # -- display ------------------------------------------------------------
    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append(f"{sign} {body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    # -- Sturm machinery ----------------------------------------------------
    @cached_property
    def squarefree_part(self) -> "Poly":
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial")
        if self.degree <= 0:
            return Poly.const(1)
        return self.exact_div(poly_gcd(self, self.derivative())).monic()

    @cached_property
    def sturm_sequence(self) -> tuple["Poly", ...]:
        seq = [self, self.derivative()]
        while not seq[-1].is_zero():
            seq.append(-(seq[-2] % seq[-1]))
        seq.pop()
        return tuple(seq)

    def sign_variations(self, x: Fraction) -> int:
        """Sign variations of the Sturm sequence at a rational ``x``."""
        signs = [s for s in (_sign(p(x)) for p in self.sturm_sequence) if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count_roots(self, lo: Fraction, hi: Fraction) -> int:
        """Number of distinct real roots in ``(lo, hi]`` (Sturm's theorem)."""
        return self.sign_variations(lo) - self.sign_variations(hi)

    def cauchy_bound(self) -> Fraction:
        lc = abs(self.lc)
        return 1 + max((abs(c) / lc for c in self.coeffs[:-1]), default=Fraction(0))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def sign(x) -> int:
    return _sign(x)


T = Poly.t()
ONE = Poly.const(1)
