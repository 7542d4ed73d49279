"""Exact dense linear algebra over cyclotomic fields."""

from src.linalg.matrix import (
    Matrix, Vector, charpoly, dot, inverse, is_zero_vector, kronecker, matmul, rref,
    rref_rows, solve, trace, unit_vector, vec_add, vec_scale, vec_sub, zero_vector
)
from src.linalg.subspace import (
    EchelonBasis, Subspace, annihilator, intersection, kernel, quotient_data, subspace_ops
)
