#!/usr/bin/env python3
"""
Tests for exact matrices and RREF subspaces over Q(zeta_N).
"""

import random
import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent.absolute()
sys.path.insert(0, str(project_root))

import pytest

from src.field import context_for
from src.linalg import (
    EchelonBasis, Matrix, Subspace, annihilator, charpoly, dot, intersection, inverse,
    kernel, kronecker, quotient_data, rref, solve, subspace_ops, trace, unit_vector,
    vec_add, vec_scale
)
from src.utils.error_handling import DimensionMismatch, ShapeMismatch, SingularSystem


CTX = context_for(12)


def vec(*values):
    return tuple(CTX.coerce(v) for v in values)


def test_matrix_products_and_identity():
    """M @ I = M, Kronecker shape and row order."""
    z = CTX.zeta(1)
    m = Matrix.from_rows(CTX, [[1, z], [0, 2]])
    assert m @ Matrix.identity(CTX, 2) == m
    assert m.apply(vec(1, 1)) == (1 + z, CTX.rational(2))
    assert m.apply_left(vec(1, 1)) == (CTX.one, z + 2)
    k = kronecker(m, Matrix.identity(CTX, 2))
    assert (k.rows, k.cols) == (4, 4)
    assert k.get(1, 3) == z
    with pytest.raises(ShapeMismatch):
        m @ Matrix.zeros(CTX, 3, 1)
    with pytest.raises(ShapeMismatch):
        Matrix.from_rows(CTX, [[1, 2], [3]])


def test_rref_and_rank():
    """RREF drops dependent rows."""
    m = Matrix.from_rows(CTX, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    reduced, rank = rref(m)
    print(f"rank = {rank}")
    assert rank == 2
    assert reduced.row(0) == vec(1, 0, 1)
    assert reduced.row(1) == vec(0, 1, 1)


def test_solve_and_inverse():
    """Solutions check out and singular systems are reported."""
    z = CTX.zeta(1)
    m = Matrix.from_rows(CTX, [[z, 1], [1, -1]])
    x = solve(m, vec(1, 0))
    assert m.apply(x) == vec(1, 0)
    assert inverse(m) @ m == Matrix.identity(CTX, 2)
    singular = Matrix.from_rows(CTX, [[1, 1], [1, 1]])
    with pytest.raises(SingularSystem):
        solve(singular, vec(1, 0))
    with pytest.raises(SingularSystem):
        inverse(singular)


def test_trace_and_charpoly():
    """charpoly of a rotation by zeta_4 is x^2 + 1."""
    i = CTX.root(4)
    m = Matrix.from_rows(CTX, [[i, 0], [0, -i]])
    assert trace(m) == 0
    assert charpoly(m) == [CTX.one, CTX.zero, CTX.one]
    flip = Matrix.from_rows(CTX, [[0, 1], [1, 0]])
    assert charpoly(flip) == [-CTX.one, CTX.zero, CTX.one]


def test_vector_helpers():
    """Vector arithmetic stays in the field."""
    a = vec(1, 2)
    b = vec(3, -1)
    assert vec_add(a, b) == vec(4, 1)
    assert vec_scale(2, a) == vec(2, 4)
    assert dot(a, b) == 1
    assert unit_vector(CTX, 3, 1) == vec(0, 1, 0)


def test_kernel_dimension():
    """rank + nullity = number of columns."""
    m = Matrix.from_rows(CTX, [[1, 1, 0, 0], [0, 0, 1, 1]])
    k = kernel(m)
    assert k.dim == 2
    for v in k.basis:
        assert not any(m.apply(v)), "kernel vector not annihilated"


def test_subspace_canonical_form():
    """Different spanning sets of the same subspace compare equal."""
    a = Subspace.span(CTX, 3, [vec(1, 1, 0), vec(0, 1, 1)])
    b = Subspace.span(CTX, 3, [vec(1, 2, 1), vec(1, 0, -1), vec(2, 2, 0)])
    assert a == b
    assert subspace_ops(a, b, "equals")
    assert a.contains_vector(vec(1, 3, 2))
    assert not a.contains_vector(vec(1, 0, 0))
    assert a.coordinates(vec(1, 0, 0)) is None


def test_sum_and_intersection():
    """dim(A + B) + dim(A n B) = dim A + dim B."""
    a = Subspace.span(CTX, 4, [vec(1, 0, 0, 0), vec(0, 1, 0, 0)])
    b = Subspace.span(CTX, 4, [vec(0, 1, 0, 0), vec(0, 0, 1, 0)])
    total = subspace_ops(a, b, "sum")
    common = intersection(a, b)
    print(f"sum {total.dim}, intersection {common.dim}")
    assert total.dim + common.dim == a.dim + b.dim
    assert common == Subspace.span(CTX, 4, [vec(0, 1, 0, 0)])
    assert subspace_ops(total, a, "contains")
    assert a <= total
    with pytest.raises(DimensionMismatch):
        subspace_ops(a, Subspace.zero(CTX, 3), "sum")


def random_subspace(rng, ambient):
    """Span of a few random small-integer vectors, often with dependencies."""
    count = rng.randint(0, ambient)
    vectors = [vec(*(rng.randint(-2, 2) for _ in range(ambient))) for _ in range(count)]
    return Subspace.span(CTX, ambient, vectors)


def test_dimension_formula_on_random_pairs():
    """dim(A + B) + dim(A n B) = dim A + dim B for random pairs."""
    rng = random.Random(7)
    for _ in range(40):
        ambient = rng.randint(1, 5)
        a, b = random_subspace(rng, ambient), random_subspace(rng, ambient)
        total = subspace_ops(a, b, "sum")
        common = subspace_ops(a, b, "intersect")
        assert total.dim + common.dim == a.dim + b.dim
        assert a <= total and b <= total
        assert common <= a and common <= b


def test_annihilator_is_an_involution():
    """annihilator(annihilator(V)) = V and dimensions are complementary."""
    rng = random.Random(11)
    for _ in range(40):
        ambient = rng.randint(1, 5)
        v = random_subspace(rng, ambient)
        ann = annihilator(v)
        assert ann.dim + v.dim == ambient
        assert annihilator(ann) == v


def test_annihilator_and_quotient():
    """Quotient coordinates have the subspace as kernel."""
    v = Subspace.span(CTX, 3, [vec(1, -1, 0)])
    assert annihilator(v).dim == 2
    projection, section = quotient_data(v)
    assert (projection.rows, projection.cols) == (2, 3)
    assert projection @ section == Matrix.identity(CTX, 2)
    assert kernel(projection) == v
    assert annihilator(Subspace.zero(CTX, 3)) == Subspace.full(CTX, 3)


def test_echelon_basis_grows_only_on_new_vectors():
    """EchelonBasis.add reports whether the span grew."""
    basis = EchelonBasis(CTX, 3)
    assert basis.add(vec(1, 1, 0))
    assert not basis.add(vec(2, 2, 0))
    assert basis.add(vec(0, 1, 1))
    assert basis.dim == 2
    assert len(basis.originals) == 2
    assert basis.subspace() == Subspace.span(CTX, 3, basis.originals)


if __name__ == "__main__":
    test_matrix_products_and_identity()
    test_rref_and_rank()
    test_solve_and_inverse()
    test_trace_and_charpoly()
    test_vector_helpers()
    test_kernel_dimension()
    test_subspace_canonical_form()
    test_sum_and_intersection()
    test_dimension_formula_on_random_pairs()
    test_annihilator_is_an_involution()
    test_annihilator_and_quotient()
    test_echelon_basis_grows_only_on_new_vectors()
    print("✅ All linear algebra tests passed!")
