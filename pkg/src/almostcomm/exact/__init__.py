"""Exact arithmetic over Q: matrices, vectors, polynomials and permutations."""
from fractions import Fraction

from .cpoly import CPoly
from .linalg import (
    charpoly,
    charpoly_coeffs,
    has_distinct_eigenvalues,
    in_span,
    kernel,
    rank,
    rank_kernel,
    rank_of_vectors,
    rational_spectrum,
    span_basis,
)
from .matrix import Q, RatMatrix, RatVector, qstr
from .mpoly import MPoly, poly_exact_divide

Rational = Fraction

__all__ = [
    "CPoly",
    "MPoly",
    "Q",
    "RatMatrix",
    "RatVector",
    "Rational",
    "charpoly",
    "charpoly_coeffs",
    "has_distinct_eigenvalues",
    "in_span",
    "kernel",
    "poly_exact_divide",
    "qstr",
    "rank",
    "rank_kernel",
    "rank_of_vectors",
    "rational_spectrum",
    "span_basis",
]
