from .factor import MAX_DEGREE, factor_rational, irreducible_factors, rational_roots, squarefree_decomposition
from .parse import parse_poly, parse_ratfunc, parse_realalg
from .poly import Poly, poly_gcd, sign
from .ratfunc import RatFunc
from .realalg import RealAlg, compare, rational_between, sign_at, sturm_isolate

__all__ = [
    "MAX_DEGREE",
    "Poly",
    "RatFunc",
    "RealAlg",
    "compare",
    "factor_rational",
    "irreducible_factors",
    "parse_poly",
    "parse_ratfunc",
    "parse_realalg",
    "poly_gcd",
    "rational_between",
    "rational_roots",
    "sign",
    "sign_at",
    "squarefree_decomposition",
    "sturm_isolate",
]
