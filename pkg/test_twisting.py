#!/usr/bin/env python3
"""
Tests for twists, pseudo-twists and 2-cocycle deformations.
"""

import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent.absolute()
sys.path.insert(0, str(project_root))

import pytest

from src.builders import (
    cyclic_group_table, dihedral_group_table, function_algebra, group_algebra,
    group_from_name, group_morphism_hopf
)
from src.field import context_for
from src.hopf import is_commutative, validate
from src.hopf.tensor import pure_tensor
from src.image import identity_rep
from src.twisting import (
    NEITHER, PSEUDO_TWIST, TWIST, bicharacter_cocycle, check_cocycle, check_pseudo_twist,
    convolution_inverse, cotwist_hopf, group_twist, hopf_ideal_transport, induced_cocycle,
    klein_bicharacter, make_cocycle, make_twist, one_sided_twisted_algebras, trivial_cocycle,
    twist_hopf, twisted_hopf_image_check
)
from src.utils.error_handling import (
    HostMismatch, NotACocycle, NotATwist, NotGroupLike, NotSurjective
)


CTX = context_for(12)


def klein():
    return group_algebra(group_from_name("Z2xZ2"), CTX)


def test_trivial_twist():
    """1 (x) 1 is a twist and leaves H unchanged."""
    h = group_algebra(cyclic_group_table(3), CTX).hopf
    t = make_twist(h, pure_tensor(h.unit, h.unit))
    verdict = check_pseudo_twist(t)
    assert verdict.kind == TWIST
    assert t.u == h.unit
    assert twist_hopf(t).comult == h.comult


def test_unnormalized_element_is_neither():
    """2 (1 (x) 1) breaks the counit normalization."""
    h = group_algebra(cyclic_group_table(3), CTX).hopf
    omega = {key: 2 * value for key, value in pure_tensor(h.unit, h.unit).items()}
    verdict = check_pseudo_twist(make_twist(h, omega))
    print(f"Verdict: {verdict.kind} ({verdict.witness})")
    assert verdict.kind == NEITHER
    assert not verdict
    assert "epsilon" in verdict.witness
    with pytest.raises(NotATwist):
        twist_hopf(make_twist(h, omega))


def test_non_invertible_element_is_rejected():
    """delta_1 (x) delta_1 is not invertible in k^Z3 (x) k^Z3."""
    h = function_algebra(cyclic_group_table(3), CTX).hopf
    with pytest.raises(NotATwist):
        make_twist(h, {(1, 1): CTX.one})


def test_non_cocycle_on_commutative_host_is_pseudo_twist():
    """A normalized non-cocycle on k^Z3 is only a pseudo-twist, since conjugation is trivial."""
    h = function_algebra(cyclic_group_table(3), CTX).hopf
    omega = {(a, b): CTX.rational(2 if (a, b) == (1, 1) else 1) for a in range(3) for b in range(3)}
    t = make_twist(h, omega)
    verdict = check_pseudo_twist(t)
    print(f"Verdict: {verdict.kind}")
    assert verdict.kind == PSEUDO_TWIST
    assert verdict
    twisted = twist_hopf(t)
    assert validate(twisted)
    assert twisted.comult == h.comult


def test_dihedral_twist_changes_the_coproduct():
    """The Klein twist on {1, r^2, s, r^2 s} deforms k[D4]."""
    h = group_algebra(dihedral_group_table(4), CTX).hopf
    t = group_twist(h, h.basis_vector(2), h.basis_vector(4))
    assert check_pseudo_twist(t).kind == TWIST
    twisted = twist_hopf(t)
    assert validate(twisted)
    assert twisted.mult == h.mult
    assert twisted.comult != h.comult


def test_group_twist_argument_checks():
    """Generators must be distinct commuting group-likes of order two."""
    h = group_algebra(dihedral_group_table(4), CTX).hopf
    with pytest.raises(NotGroupLike):
        group_twist(h, h.basis_vector(1), h.basis_vector(4))
    with pytest.raises(NotGroupLike):
        group_twist(h, h.basis_vector(4), h.basis_vector(4))
    with pytest.raises(NotGroupLike):
        group_twist(h, h.basis_vector(4), h.basis_vector(5))


def test_transport_and_twisted_image():
    """Hopf ideals and I_pi agree on H and H_Omega."""
    d4 = group_algebra(dihedral_group_table(4), CTX)
    z2 = group_algebra(cyclic_group_table(2), CTX)
    h = d4.hopf
    t = group_twist(h, h.basis_vector(2), h.basis_vector(4))
    twisted = twist_hopf(t)
    sign = group_morphism_hopf(d4, z2, [a // 4 for a in range(8)])
    verdict = hopf_ideal_transport(h, t, sign.kernel(), twisted)
    assert verdict.in_host and verdict.in_twisted
    assert verdict.agrees

    image = twisted_hopf_image_check(identity_rep(h), t, twisted)
    assert image.ideals_equal
    assert image.host_ideal.is_zero()
    assert image.pushforward.kind == TWIST


def test_trivial_cocycle_reproduces_the_structure():
    """H^(epsilon (x) epsilon) = H."""
    h = group_algebra(dihedral_group_table(3), CTX).hopf
    c = trivial_cocycle(h)
    assert check_cocycle(c)
    cotwisted = cotwist_hopf(c)
    assert cotwisted.mult == h.mult
    assert cotwisted.antipode == h.antipode


def test_klein_bicharacter_cocycle():
    """The bicharacter (-1)^(jk) makes sigma H non-commutative while H^sigma = H."""
    example = klein()
    h = example.hopf
    gl = example.grouplikes
    c = bicharacter_cocycle(h, gl, klein_bicharacter(gl, 2, 1))
    verdict = check_cocycle(c)
    assert verdict, verdict.failed
    left, right = one_sided_twisted_algebras(c)
    assert not is_commutative(left)
    assert not is_commutative(right)
    assert cotwist_hopf(c).mult == h.mult
    assert c.evaluate(h.basis_vector(1), h.basis_vector(2)) == -1
    assert c.evaluate(h.basis_vector(2), h.basis_vector(1)) == 1


def test_klein_bicharacter_needs_a_klein_group():
    """Z4 is not a Klein four-group."""
    example = group_algebra(cyclic_group_table(4), CTX)
    with pytest.raises(NotACocycle):
        klein_bicharacter(example.grouplikes, 1, 2)


def test_cocycle_failures():
    """Normalization and invertibility are enforced."""
    h = klein().hopf
    doubled = [[2 * x * y for y in h.counit] for x in h.counit]
    c = make_cocycle(h, doubled)
    verdict = check_cocycle(c)
    assert not verdict
    assert verdict.failed.startswith("normalization")
    with pytest.raises(NotACocycle):
        cotwist_hopf(c)
    with pytest.raises(NotACocycle):
        make_cocycle(h, [[0] * 4 for _ in range(4)])
    inverse = convolution_inverse(h, trivial_cocycle(h).sigma)
    assert inverse == trivial_cocycle(h).sigma


def test_induced_cocycle():
    """sigma o (p (x) p) along k[Z4 x Z2] -> k[Z2 x Z2] is again a cocycle."""
    target = klein()
    source = group_algebra(group_from_name("Z4xZ2"), CTX)
    p = group_morphism_hopf(source, target, [(a // 2 % 2) * 2 + a % 2 for a in range(8)])
    c = bicharacter_cocycle(target.hopf, target.grouplikes, klein_bicharacter(target.grouplikes, 2, 1))
    induced = induced_cocycle(c, p)
    assert induced.host.dim == 8
    assert check_cocycle(induced)

    collapse = group_morphism_hopf(target, target, [0, 0, 0, 0])
    with pytest.raises(NotSurjective):
        induced_cocycle(c, collapse)
    with pytest.raises(HostMismatch):
        induced_cocycle(trivial_cocycle(source.hopf), p)


if __name__ == "__main__":
    test_trivial_twist()
    test_unnormalized_element_is_neither()
    test_non_invertible_element_is_rejected()
    test_non_cocycle_on_commutative_host_is_pseudo_twist()
    test_dihedral_twist_changes_the_coproduct()
    test_group_twist_argument_checks()
    test_transport_and_twisted_image()
    test_trivial_cocycle_reproduces_the_structure()
    test_klein_bicharacter_cocycle()
    test_klein_bicharacter_needs_a_klein_group()
    test_cocycle_failures()
    test_induced_cocycle()
    print("✅ All twisting tests passed!")
