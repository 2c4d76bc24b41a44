"""Exact integer/rational arithmetic: polynomials, characteristic polynomials, real roots."""

from .matrix import IntMatrix, bareiss_det, char_poly, det_at
from .poly import (
    IntPolynomial,
    exact_quotient,
    poly_gcd,
    square_free_decomposition,
    square_free_part,
)
from .roots import (
    IndeterminateRoots,
    RootInterval,
    count_distinct_real_roots,
    decimal_string,
    isolate_real_roots,
    min_int_nonneg_on_ray,
    refine_root,
    sign_change_polynomial,
    sturm_chain,
)

__all__ = [
    "IntMatrix",
    "IntPolynomial",
    "IndeterminateRoots",
    "RootInterval",
    "bareiss_det",
    "char_poly",
    "count_distinct_real_roots",
    "decimal_string",
    "det_at",
    "exact_quotient",
    "isolate_real_roots",
    "min_int_nonneg_on_ray",
    "poly_gcd",
    "refine_root",
    "sign_change_polynomial",
    "square_free_decomposition",
    "square_free_part",
    "sturm_chain",
]
