#!/usr/bin/env python3
"""
Tests for the example builders: groups, group and function algebras,
Taft algebras and A(k, e).
"""

import random
import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent.absolute()
sys.path.insert(0, str(project_root))

import pytest

from src.builders import (
    ake, ake_representation, alternating_basis, character_span_injectivity, character_vectors,
    cyclic_group_table, cyclic_rep, degraded_pi, dihedral_group_table, evaluation_rep,
    find_element, function_algebra, group_algebra, group_from_name, group_morphism_hopf,
    is_projective_generating_family, linear_characters, make_group_table, pi_q,
    product_group_table, random_taft_representation, representation_comodule,
    standard_comodule, symmetric_group_table, taft
)
from src.field import context_for
from src.hopf import validate
from src.image import validate_rep
from src.linalg import Matrix
from src.tannaka import hom_comodule, validate_comodule
from src.utils.error_handling import (
    DimensionMismatch, IndexOutOfRange, InvalidTable, MissingCharacterTable, NotAnNthRoot,
    OrderMismatch, WrongOrder
)


CTX = context_for(12)


def test_cyclic_and_product_groups():
    """Z4 is cyclic of exponent 4; Z2 x Z2 needs two generators."""
    z4 = cyclic_group_table(4)
    assert z4.labels == ("1", "x", "x^2", "x^3")
    assert z4.element_order(1) == 4
    assert z4.exponent() == 4
    assert z4.generators() == [1]

    klein = product_group_table(cyclic_group_table(2), cyclic_group_table(2))
    assert klein.order == 4
    assert klein.labels[3] == "(x,x)"
    assert klein.exponent() == 2
    assert klein.generators() == [1, 2]
    assert klein.cyclic_factors == (2, 2)


def test_dihedral_group():
    """D4 on r^a s^f at f * 4 + a, with s r = r^3 s."""
    d4 = dihedral_group_table(4)
    assert d4.order == 8
    assert not d4.is_abelian()
    assert d4.labels[4] == "s"
    assert d4.labels[5] == "rs"
    assert d4.element_order(1) == 4
    assert d4.element_order(4) == 2
    assert d4.table[4][1] == 7


def test_symmetric_groups_and_characters():
    """Character tables of S3 and S4 satisfy the first orthogonality relation."""
    s3 = symmetric_group_table(3)
    assert s3.labels == ("1", "(23)", "(12)", "(123)", "(132)", "(13)")
    assert find_element(s3, "(12)") == 2
    s4 = symmetric_group_table(4)
    assert s4.order == 24
    assert len(s4.characters) == 5
    for name, values in s4.characters:
        assert sum(v * v for v in values) == 24, name
    with pytest.raises(InvalidTable):
        symmetric_group_table(5)
    with pytest.raises(InvalidTable):
        find_element(s3, "(1234)")


def test_group_from_name():
    """Names of families and products parse to tables."""
    assert group_from_name("Z6").order == 6
    assert group_from_name("D3").name == "D3"
    assert group_from_name("Z4xZ2").order == 8
    assert group_from_name("S3xZ2").order == 12
    for bad in ("Q8", "Zx", "S"):
        with pytest.raises(InvalidTable):
            group_from_name(bad)


def test_invalid_tables_are_rejected():
    """A table without inverses is not a group."""
    with pytest.raises(InvalidTable):
        make_group_table("bad", ["a", "b"], [[0, 1], [1, 1]])
    with pytest.raises(InvalidTable):
        make_group_table("bad", ["a", "b"], [[0, 1]])


def test_linear_characters():
    """Characters need roots of unity inside the field."""
    assert len(linear_characters(cyclic_group_table(4), CTX)) == 4
    assert len(linear_characters(cyclic_group_table(4), context_for(6))) == 2
    assert len(linear_characters(symmetric_group_table(3), CTX)) == 2


def test_group_and_function_algebras():
    """k[G] and k^G validate and have the expected group-likes."""
    d3 = dihedral_group_table(3)
    algebra = group_algebra(d3, CTX)
    functions = function_algebra(d3, CTX)
    assert validate(algebra.hopf)
    assert validate(functions.hopf)
    assert len(algebra.grouplikes) == 6
    assert len(functions.grouplikes) == 2
    assert functions.hopf.labels[0] == "delta_1"


def test_character_vectors():
    """Shipped tables, abelian fallback and the missing case."""
    s3 = function_algebra(symmetric_group_table(3), CTX)
    assert len(character_vectors(s3)) == 3
    z3 = function_algebra(cyclic_group_table(3), CTX)
    assert len(character_vectors(z3)) == 3
    with pytest.raises(MissingCharacterTable):
        character_vectors(function_algebra(dihedral_group_table(4), CTX))
    with pytest.raises(MissingCharacterTable):
        character_vectors(taft(2, CTX.root(2)))


def test_evaluation_and_character_injectivity():
    """Evaluating k^S3 at (12) separates its three characters."""
    s3 = symmetric_group_table(3)
    fa = function_algebra(s3, CTX)
    r = evaluation_rep(fa, [find_element(s3, "(12)")])
    assert character_span_injectivity(fa, r)
    assert not character_span_injectivity(fa, evaluation_rep(fa, [0]))
    with pytest.raises(IndexOutOfRange):
        evaluation_rep(fa, [6])


def test_projective_generating_family():
    """(12) and (123) generate S3 x S3 in pairs; (12) alone does not."""
    s3 = symmetric_group_table(3)
    points = [find_element(s3, "(12)"), find_element(s3, "(123)")]
    assert is_projective_generating_family(s3, points)
    assert not is_projective_generating_family(s3, points[:1])


def test_cyclic_rep_needs_a_root():
    """zeta_4 is not a cube root of unity."""
    assert validate_rep(cyclic_rep(3, CTX.root(3)))
    with pytest.raises(NotAnNthRoot):
        cyclic_rep(3, CTX.root(4))


def test_group_morphisms():
    """Only homomorphisms induce Hopf maps."""
    z3 = group_algebra(cyclic_group_table(3), CTX)
    assert group_morphism_hopf(z3, z3, [0, 2, 1]).is_injective()
    with pytest.raises(InvalidTable):
        group_morphism_hopf(z3, z3, [0, 1, 1])
    with pytest.raises(InvalidTable):
        group_morphism_hopf(z3, z3, [0, 1])


def test_standard_comodule():
    """The standard comodule of k^S3 is simple of dimension two."""
    fa = function_algebra(symmetric_group_table(3), CTX)
    u = standard_comodule(fa)
    assert u.dim == 2
    assert validate_comodule(u)
    assert hom_comodule(u, u).dim == 1
    with pytest.raises(InvalidTable):
        representation_comodule(fa, [Matrix.identity(CTX, 2)])


def test_taft_algebras():
    """T_n(q) has dimension n^2 and needs q of order exactly n."""
    for n in (2, 3, 4):
        example = taft(n, CTX.root(n))
        assert example.dim == n * n
        assert len(example.grouplikes) == n
        assert example.hopf.labels[1] == "x"
        assert example.hopf.labels[n] == "g"
    with pytest.raises(WrongOrder):
        taft(3, CTX.root(2))
    with pytest.raises(WrongOrder):
        taft(1, CTX.one)


def test_random_taft_representations():
    """Seeded random representations are valid and bounded in size."""
    example = taft(3, CTX.root(3))
    rng = random.Random(7)
    for _ in range(5):
        assert validate_rep(random_taft_representation(example, rng))
    with pytest.raises(DimensionMismatch):
        random_taft_representation(example, rng, size=4)


def test_ake_dimensions_and_companions():
    """dim A(k, e) = 4k with C(1)..C(k-1) and four group-likes over Q(zeta_12)."""
    for k in (1, 2, 3):
        for e in (1, -1):
            example = ake(k, e, CTX)
            assert example.dim == 4 * k
            assert len(example.grouplikes) == 4
            assert [u.name for u in example.comodules] == [f"C({j})" for j in range(1, k)]
    assert len(alternating_basis(3)) == 12
    assert alternating_basis(2)[0].label == "v11^2"


def test_ake_without_a_square_root_of_minus_one():
    """Over Q(zeta_6) only 1 and d are found in A(2, -1)."""
    example = ake(2, -1, context_for(6))
    assert len(example.grouplikes) == 2
    assert not example.grouplikes.complete
    assert example.notes


def test_ake_argument_and_relation_checks():
    """Bad parameters and relation-breaking images are rejected."""
    with pytest.raises(ValueError):
        ake(0, 1, CTX)
    with pytest.raises(ValueError):
        ake(2, 2, CTX)
    minus = ake(2, -1, CTX)
    with pytest.raises(OrderMismatch):
        degraded_pi(minus)
    flip = Matrix.from_rows(CTX, [[0, 1], [1, 0]])
    with pytest.raises(OrderMismatch):
        ake_representation(minus, flip, flip)
    assert validate_rep(pi_q(ake(3, 1, CTX), CTX.root(3)))
    assert validate_rep(degraded_pi(ake(2, 1, CTX)))


if __name__ == "__main__":
    test_cyclic_and_product_groups()
    test_dihedral_group()
    test_symmetric_groups_and_characters()
    test_group_from_name()
    test_invalid_tables_are_rejected()
    test_linear_characters()
    test_group_and_function_algebras()
    test_character_vectors()
    test_evaluation_and_character_injectivity()
    test_projective_generating_family()
    test_cyclic_rep_needs_a_root()
    test_group_morphisms()
    test_standard_comodule()
    test_taft_algebras()
    test_random_taft_representations()
    test_ake_dimensions_and_companions()
    test_ake_without_a_square_root_of_minus_one()
    test_ake_argument_and_relation_checks()
    print("✅ All builder tests passed!")
