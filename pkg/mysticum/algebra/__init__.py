"""Exact rational linear algebra and homogeneous ternary forms."""

from .linear import (
    Rat,
    RatMatrix,
    canonical,
    determinant,
    format_rat,
    nullspace,
    rank,
    rank_of_rows,
    row_reduced_basis,
    solve,
    to_rat,
)
from .poly import (
    HomoPoly,
    dimension,
    evaluation_row,
    monomials,
    poly_divide_exact,
    poly_eval,
    poly_mul,
    poly_product,
)

__all__ = [
    "Rat",
    "RatMatrix",
    "canonical",
    "determinant",
    "format_rat",
    "nullspace",
    "rank",
    "rank_of_rows",
    "row_reduced_basis",
    "solve",
    "to_rat",
    "HomoPoly",
    "dimension",
    "evaluation_row",
    "monomials",
    "poly_divide_exact",
    "poly_eval",
    "poly_mul",
    "poly_product",
]
