"""Exact arithmetic: checked integers and polynomials over prime fields."""

from .integers import (
    IntFactorization,
    checked_add,
    checked_mul,
    divisors,
    factor_int,
    gcd_int,
    is_prime,
    lcm3_int,
    lcm_int,
    squarefree_part_int,
)
from .polynomials import (
    PolyFactorization,
    PrimeFieldPoly,
    MAX_EXPONENT,
    MAX_FACTOR_DEGREE,
    certify_irreducible,
    certify_irreducible_exhaustive,
    factor_poly,
    format_poly,
    is_irreducible_poly,
    monic_divisors,
    monic_polys,
    parse_poly,
    poly_add,
    poly_divmod,
    poly_gcd,
    poly_lcm,
    poly_mul,
    squarefree_part_poly,
)

__all__ = [
    "IntFactorization",
    "checked_add",
    "checked_mul",
    "divisors",
    "factor_int",
    "gcd_int",
    "is_prime",
    "lcm3_int",
    "lcm_int",
    "squarefree_part_int",
    "PolyFactorization",
    "PrimeFieldPoly",
    "MAX_EXPONENT",
    "MAX_FACTOR_DEGREE",
    "certify_irreducible",
    "certify_irreducible_exhaustive",
    "factor_poly",
    "format_poly",
    "is_irreducible_poly",
    "monic_divisors",
    "monic_polys",
    "parse_poly",
    "poly_add",
    "poly_divmod",
    "poly_gcd",
    "poly_lcm",
    "poly_mul",
    "squarefree_part_poly",
]
