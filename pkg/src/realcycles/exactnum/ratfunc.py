"""Rational functions in Q(t), reduced with monic denominator."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .factor import factor_rational, valuation
from .poly import Poly, poly_gcd, sign
from .realalg import RealAlg, sign_at


class RatFunc:
    __slots__ = ("num", "den", "__dict__")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = Poly.const(1) if den is None else (den if isinstance(den, Poly) else Poly.const(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Poly.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        c = den.lc
        self.num = num * (1 / c)
        self.den = den * (1 / c)

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other) -> "RatFunc":
        o = RatFunc.coerce(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        o = RatFunc.coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = RatFunc.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int) -> "RatFunc":
        if n >= 0:
            return RatFunc(self.num ** n, self.den ** n)
        return RatFunc(self.den ** -n, self.num ** -n)

    def __call__(self, x: Fraction) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def compose(self, f: "RatFunc") -> "RatFunc":
        """Substitute ``t -> f``."""
        n = max(self.num.degree, self.den.degree, 0)
        a = self.num.homogenized_compose(f.num, f.den, n)
        b = self.den.homogenized_compose(f.num, f.den, n)
        return RatFunc(a, b)

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        if self.den == Poly.const(1):
            return str(self.num)
        n = str(self.num)
        if len(self.num.coeffs) > 1 and sum(1 for c in self.num.coeffs if c) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    # -- local data -----------------------------------------------------------
    @cached_property
    def factorization(self) -> tuple[Fraction, tuple[tuple[Poly, int], ...]]:
        """``(c, ((p, e), ...))`` with ``self = c * prod p**e``, ``p`` monic irreducible, ``e != 0``."""
        if self.is_zero():
            raise ValueError("zero has no factorization")
        c = self.num.lc / self.den.lc
        parts = {p: e for p, e in factor_rational(self.num)} if self.num.degree > 0 else {}
        if self.den.degree > 0:
            for p, e in factor_rational(self.den):
                parts[p] = parts.get(p, 0) - e
        fs = tuple(sorted(((p, e) for p, e in parts.items() if e), key=lambda pe: (pe[0].degree, pe[0].coeffs)))
        return c, fs

    def valuation_at(self, p: Poly) -> int:
        """Valuation at the monic irreducible ``p``."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        return valuation(self.num, p) - valuation(self.den, p)

    def valuation_at_infinity(self) -> int:
        """Valuation with respect to the uniformizer ``1/t``."""
        return self.den.degree - self.num.degree

    def sign_at_real(self, alpha: RealAlg) -> int:
        """Sign of the value at ``alpha``; 0 for zeros, raises at poles."""
        d = sign_at(self.den, alpha)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return sign_at(self.num, alpha) * d

    def local_unit_sign(self, alpha: RealAlg) -> tuple[int, int]:
        """``(k, s)`` with ``self = (t - alpha)**k * u`` near ``alpha`` and ``s = sign u(alpha)``."""
        m = alpha.minpoly
        k = self.valuation_at(m)
        rest = self * RatFunc(m) ** (-k)
        s = rest.sign_at_real(alpha)
        if k % 2:
            # m = (t - alpha) * w with w(alpha) = m'(alpha)
            s *= sign_at(m.derivative(), alpha)
        return k, s

    def infinity_unit_sign(self) -> tuple[int, int]:
        """``(k, s)`` with ``self = (1/t)**k * u`` and ``s = sign u(infinity)``."""
        return self.valuation_at_infinity(), sign(self.num.lc) * sign(self.den.lc)

    def square_class(self) -> "RatFunc":
        """Canonical representative of the class in R(t)^x / squares: sign * prod of odd-power factors."""
        c, fs = self.factorization
        out = Poly.const(sign(c))
        for p, e in fs:
            if e % 2:
                out = out * p
        return RatFunc(out)


ONE = RatFunc(1)
T = RatFunc(Poly.t())
