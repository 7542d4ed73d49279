#!/usr/bin/env python3
"""
Tests for group-like elements, skew-primitives and the pointed criterion.
"""

import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent.absolute()
sys.path.insert(0, str(project_root))

import pytest

from src.builders import (
    cyclic_group_table, function_algebra, group_algebra, taft, taft_representation
)
from src.field import context_for
from src.image import counit_rep, is_inner_faithful
from src.linalg import Matrix, vec_sub
from src.pointed import find_grouplikes, is_grouplike, pointed_criterion, skew_primitives, verify_grouplikes
from src.utils.error_handling import NotClosed, NotGroupLike


CTX = context_for(12)


def sweedler():
    return taft(2, CTX.root(2))


def test_grouplike_predicate():
    """Basis elements of k[G] are group-like; their differences are not."""
    h = group_algebra(cyclic_group_table(3), CTX).hopf
    assert is_grouplike(h, h.basis_vector(1))
    assert not is_grouplike(h, vec_sub(h.basis_vector(1), h.unit))
    assert not is_grouplike(h, tuple(2 * x for x in h.unit))


def test_verify_grouplikes_tabulates_the_group():
    """The group law of Z3 is recovered from its group-likes."""
    h = group_algebra(cyclic_group_table(3), CTX).hopf
    gl = verify_grouplikes(h, [h.basis_vector(i) for i in range(3)] + [h.basis_vector(1)])
    assert len(gl) == 3
    assert gl.identity == 0
    assert gl.table[1][1] == 2
    assert gl.inverses == (0, 2, 1)
    assert gl.order_of(1) == 3
    assert gl.index_of(h.basis_vector(2)) == 2
    assert gl.span().dim == 3


def test_verify_grouplikes_requires_closure():
    """{1, x} is not closed in Z3."""
    h = group_algebra(cyclic_group_table(3), CTX).hopf
    with pytest.raises(NotClosed):
        verify_grouplikes(h, [h.unit, h.basis_vector(1)])


def test_find_grouplikes_in_cocommutative_hosts():
    """Characters of Z3 are found over Q(zeta_12) but not over Q(i)."""
    fa = function_algebra(cyclic_group_table(3), CTX)
    gl = find_grouplikes(fa.hopf)
    print(f"k^Z3 over Q(zeta_12): {len(gl)} group-likes, complete={gl.complete}")
    assert len(gl) == 3
    assert gl.complete

    small = function_algebra(cyclic_group_table(3), context_for(4))
    gl = find_grouplikes(small.hopf)
    print(f"k^Z3 over Q(i): {len(gl)} group-likes, complete={gl.complete}")
    assert len(gl) == 1
    assert not gl.complete


def test_find_grouplikes_in_taft_algebra():
    """Sweedler's algebra is not cocommutative; the basis group-likes are still found."""
    h = sweedler().hopf
    gl = find_grouplikes(h)
    assert len(gl) == 2
    assert not gl.complete


def test_skew_primitive_dimensions():
    """P_{1,g} of T_3(q) is spanned by 1 - g and x; P_{1,g^2} only by 1 - g^2."""
    example = taft(3, CTX.root(3))
    h = example.hopf
    one, g, g2 = (h.basis_vector(i) for i in (0, 3, 6))
    assert skew_primitives(h, one, g).dim == 2
    assert skew_primitives(h, one, g2).dim == 1
    assert skew_primitives(h, one, one).dim == 0
    x = h.basis_vector(1)
    assert skew_primitives(h, one, g).space.contains_vector(x)
    # x is (1, g)-skew, never (g, 1)-skew; g^2 x is (g^2, 1)-skew
    assert skew_primitives(h, g, one).dim == 1
    assert not skew_primitives(h, g, one).space.contains_vector(x)
    assert skew_primitives(h, g2, one).space.contains_vector(h.basis_vector(7))
    with pytest.raises(NotGroupLike):
        skew_primitives(h, x, one)


def test_pointed_criterion_on_sweedler():
    """x -> E12 keeps the skew-primitives; x -> 0 kills one."""
    example = sweedler()
    g = Matrix.from_rows(CTX, [[1, 0], [0, -1]])
    x = Matrix.from_rows(CTX, [[0, 1], [0, 0]])
    faithful = taft_representation(example, g, x)
    for side in ("left", "right"):
        verdict = pointed_criterion(faithful, example.grouplikes, side)
        assert verdict, f"{side} criterion should hold"
        assert verdict.side == side

    degenerate = taft_representation(example, g, Matrix.zeros(CTX, 2, 2))
    verdict = pointed_criterion(degenerate, example.grouplikes)
    print(f"Failing group-like: {verdict.grouplike}, witness: {verdict.witness}")
    assert not verdict
    assert verdict.grouplike == 1
    assert any(verdict.witness)
    assert not any(degenerate.apply(verdict.witness))
    assert not is_inner_faithful(degenerate)


def test_pointed_criterion_on_counit():
    """The counit kills 1 - g."""
    example = sweedler()
    assert not pointed_criterion(counit_rep(example.hopf), example.grouplikes, "right")


def test_pointed_criterion_rejects_unknown_side():
    """side must be left or right."""
    example = sweedler()
    with pytest.raises(ValueError):
        pointed_criterion(counit_rep(example.hopf), example.grouplikes, "up")


if __name__ == "__main__":
    test_grouplike_predicate()
    test_verify_grouplikes_tabulates_the_group()
    test_verify_grouplikes_requires_closure()
    test_find_grouplikes_in_cocommutative_hosts()
    test_find_grouplikes_in_taft_algebra()
    test_skew_primitive_dimensions()
    test_pointed_criterion_on_sweedler()
    test_pointed_criterion_on_counit()
    test_pointed_criterion_rejects_unknown_side()
    print("✅ All pointed Hopf algebra tests passed!")
