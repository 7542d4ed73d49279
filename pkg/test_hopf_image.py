#!/usr/bin/env python3
"""
Tests for representations, the convolution closure and Hopf images.
"""

import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent.absolute()
sys.path.insert(0, str(project_root))

import pytest

from src.builders import (
    cyclic_group_table, cyclic_rep, evaluation_rep, function_algebra, group_algebra,
    group_morphism_hopf, taft, taft_representation
)
from src.field import context_for
from src.hopf import validate, validate_morphism
from src.hopf.algebra import product_algebra
from src.image import (
    Representation, check_factorization, compose_with_target_isomorphism, compute_closure,
    convolve, counit_rep, faithful_tensor_ideal, hopf_image, hopf_map_kernel_check,
    hopf_map_rep, identity_rep, is_algebra_isomorphism, is_inner_faithful,
    tensor_image_surjection, validate_rep
)
from src.image.closure import verify_postconditions
from src.linalg import Matrix
from src.utils.error_handling import InvalidRepresentation, ShapeMismatch


CTX = context_for(12)


def cyclic(n):
    return group_algebra(cyclic_group_table(n), CTX)


def test_counit_is_the_convolution_unit():
    """epsilon * f = f = f * epsilon in the dual of T_3."""
    h = taft(3, CTX.root(3)).hopf
    f = tuple(CTX.rational(i + 1) for i in range(h.dim))
    assert convolve(h, h.counit, f) == f
    assert convolve(h, f, h.counit) == f


def test_counit_representation_has_trivial_image():
    """The Hopf image of epsilon is the one-dimensional Hopf algebra."""
    h = cyclic(4).hopf
    result = hopf_image(counit_rep(h))
    print(f"dim I = {result.ideal.dim}, dim H_pi = {result.dim}")
    assert result.dim == 1
    assert result.ideal.dim == 3
    assert result.closure.closure.dim == 1


def test_identity_is_inner_faithful():
    """The identity representation has zero ideal."""
    for example in (cyclic(3), taft(2, CTX.root(2))):
        r = identity_rep(example.hopf)
        assert r.is_faithful()
        assert is_inner_faithful(r)


def test_closure_trace_and_stability():
    """The closure grows monotonically and is convolution stable."""
    r = cyclic_rep(6, CTX.root(6))
    closure = compute_closure(r)
    print(f"Closure trace: {closure.trace}, antipode trace: {closure.antipode_trace}")
    assert list(closure.trace) == sorted(closure.trace)
    assert closure.closure.dim == 6
    assert closure.ideal.is_zero()
    assert closure.is_convolution_stable()
    assert closure.generators.dim == 2


def test_hopf_image_factorization():
    """pi~ o p = pi and the image of x -> zeta_3 on k[Z6] is k[Z3]."""
    r = cyclic_rep(6, CTX.root(3))
    result = hopf_image(r)
    assert result.dim == 3
    assert validate(result.image)
    assert validate_morphism(result.projection)
    assert validate_rep(result.induced)
    assert result.induced.matrix @ result.projection.matrix == r.matrix
    assert is_inner_faithful(result.induced)


def test_kernel_bounds_ideal():
    """I_pi lies inside Ker(pi), with equality for Hopf maps."""
    z6, z3 = cyclic(6), cyclic(3)
    q = group_morphism_hopf(z6, z3, [a % 3 for a in range(6)])
    r = cyclic_rep(6, CTX.root(3))
    assert r.kernel().contains(compute_closure(r).ideal)
    assert hopf_map_kernel_check(q)
    assert compute_closure(hopf_map_rep(q)).ideal.dim == 3


def test_factorization_through_a_quotient():
    """pi = phi o q with q: k[Z6] -> k[Z3] gives an isomorphism onto H_pi."""
    z6, z3 = cyclic(6), cyclic(3)
    q = group_morphism_hopf(z6, z3, [a % 3 for a in range(6)])
    r = cyclic_rep(6, CTX.root(3))
    phi = cyclic_rep(3, CTX.root(3), z3)
    verdict = check_factorization(r, q, phi)
    assert verdict
    assert verdict.is_isomorphism
    assert verdict.universal_map.target.dim == 3

    wrong = cyclic_rep(3, CTX.root(3, 2), z3)
    assert not check_factorization(r, q, wrong).factors


def test_factorization_through_a_larger_quotient():
    """The trivial representation factors through k[Z2], whose map to H_pi is not injective."""
    z6, z2 = cyclic(6), cyclic(2)
    q = group_morphism_hopf(z6, z2, [a % 2 for a in range(6)])
    r = cyclic_rep(6, CTX.one)
    phi = cyclic_rep(2, CTX.one, z2)
    verdict = check_factorization(r, q, phi)
    assert verdict.factors
    assert verdict.universal_map_exists
    assert not verdict.is_isomorphism
    assert verdict.universal_map.target.dim == 1

    s = cyclic_rep(6, -CTX.one)
    psi = cyclic_rep(2, -CTX.one, z2)
    assert check_factorization(s, q, psi).is_isomorphism
    with pytest.raises(ShapeMismatch):
        check_factorization(s, q, cyclic_rep(3, CTX.one))


def test_factorization_needs_a_surjection():
    """k[Z3] -> k[Z6], x -> x^2, composes to pi but is not onto, so nothing factors."""
    z3, z6 = cyclic(3), cyclic(6)
    q = group_morphism_hopf(z3, z6, [2 * a % 6 for a in range(3)])
    r = cyclic_rep(3, CTX.root(3), z3)
    phi = cyclic_rep(6, CTX.root(6), z6)
    assert not q.is_surjective()
    verdict = check_factorization(r, q, phi)
    assert verdict.factors
    assert not verdict.universal_map_exists
    assert not verdict
    assert verdict.failure == "q is not surjective"
    assert verdict.universal_map is None


def test_evaluation_representations():
    """Evaluating k^{Z3} at x is inner faithful; at the identity it is the counit."""
    fa = function_algebra(cyclic_group_table(3), CTX)
    assert is_inner_faithful(evaluation_rep(fa, [1]))
    assert hopf_image(evaluation_rep(fa, [0])).dim == 1
    assert not evaluation_rep(fa, [1]).is_faithful()


def test_invalid_representation_is_rejected():
    """A non-multiplicative matrix fails validation and the closure refuses it."""
    h = cyclic(3).hopf
    bogus = Representation(h, product_algebra(CTX, 1), Matrix.from_rows(CTX, [[1, 2, 3]]))
    report = validate_rep(bogus)
    assert not report.ok
    assert report.check("multiplicative").witness == (1, 1)
    with pytest.raises(InvalidRepresentation):
        compute_closure(bogus)


def test_target_isomorphism_keeps_the_image():
    """Swapping the two factors of k^2 does not change the Hopf image."""
    fa = function_algebra(cyclic_group_table(3), CTX)
    r = evaluation_rep(fa, [0, 1])
    swap = Matrix.from_rows(CTX, [[0, 1], [1, 0]])
    assert is_algebra_isomorphism(swap, r.target, r.target)
    swapped = compose_with_target_isomorphism(r, swap)
    assert compute_closure(swapped).ideal == compute_closure(r).ideal
    with pytest.raises(InvalidRepresentation):
        compose_with_target_isomorphism(r, Matrix.from_rows(CTX, [[1, 1], [0, 1]]))


def test_taft_representation_images():
    """g -> diag(1, -1), x -> E12 is inner faithful for Sweedler's algebra."""
    example = taft(2, CTX.root(2))
    g = Matrix.from_rows(CTX, [[1, 0], [0, -1]])
    x = Matrix.from_rows(CTX, [[0, 1], [0, 0]])
    r = taft_representation(example, g, x)
    assert is_inner_faithful(r)
    diagonal = taft_representation(example, g, Matrix.zeros(CTX, 2, 2))
    assert hopf_image(diagonal).dim == 2


def test_tensor_image_statements():
    """H_pi (x) L_phi maps onto the image of pi (x) phi; faithful pi gives H (x) I_phi."""
    r = cyclic_rep(2, -CTX.one)
    s = cyclic_rep(3, CTX.one)
    assert tensor_image_surjection(r, s)
    assert faithful_tensor_ideal(identity_rep(cyclic(2).hopf), s)
    with pytest.raises(InvalidRepresentation):
        faithful_tensor_ideal(s, r)


def test_postconditions_hold_for_computed_closures():
    """The computed ideal is a Hopf ideal inside the kernel."""
    r = cyclic_rep(6, CTX.root(2))
    verify_postconditions(r, compute_closure(r))


if __name__ == "__main__":
    test_counit_is_the_convolution_unit()
    test_counit_representation_has_trivial_image()
    test_identity_is_inner_faithful()
    test_closure_trace_and_stability()
    test_hopf_image_factorization()
    test_kernel_bounds_ideal()
    test_factorization_through_a_quotient()
    test_factorization_through_a_larger_quotient()
    test_factorization_needs_a_surjection()
    test_evaluation_representations()
    test_invalid_representation_is_rejected()
    test_target_isomorphism_keeps_the_image()
    test_taft_representation_images()
    test_tensor_image_statements()
    test_postconditions_hold_for_computed_closures()
    print("✅ All Hopf image tests passed!")
