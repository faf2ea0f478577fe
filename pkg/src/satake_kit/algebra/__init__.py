"""Exact arithmetic: Laurent polynomials in q, multivariate polynomials, matrices."""

from satake_kit.algebra.matrix import (
    NonPolynomialResult,
    PolyMatrix,
    RationalMatrix,
    SingularMatrix,
    block_matrix,
    kernel_power,
    matrix_conjugate,
    nullspace,
    rank,
    rref,
)
from satake_kit.algebra.multipoly import (
    MultiPolynomial,
    NotDivisible,
    StructuralError,
    poly_mul,
    variable_names,
)
from satake_kit.algebra.qpoly import QPolynomial

__all__ = [
    "MultiPolynomial",
    "NonPolynomialResult",
    "NotDivisible",
    "PolyMatrix",
    "QPolynomial",
    "RationalMatrix",
    "SingularMatrix",
    "StructuralError",
    "block_matrix",
    "kernel_power",
    "matrix_conjugate",
    "nullspace",
    "poly_mul",
    "rank",
    "rref",
    "variable_names",
]
