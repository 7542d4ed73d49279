#!/usr/bin/env python3
"""
Tests for comodules, morphism spaces and the comodule-based criteria.
"""

import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent.absolute()
sys.path.insert(0, str(project_root))

import pytest

from src.builders import (
    ake, cyclic_group_table, cyclic_rep, degraded_pi, group_algebra, group_morphism_hopf,
    pi_q, taft
)
from src.field import context_for
from src.hopf import HopfMorphism
from src.image import hopf_image
from src.tannaka import (
    character_comodule, dual_comodule, enumerate_words, factorization_hom_chain,
    hom_comodule, hom_pi, is_faithful_comodule, level_two_criterion, make_comodule,
    regular_comodule, tannaka_equality_check, tensor_comodule, trivial_comodule,
    truncated_fixedpoint_criterion, validate_comodule, word_comodule
)
from src.utils.error_handling import DimensionMismatch, HostMismatch, NotGroupLike


CTX = context_for(12)


def cyclic(n):
    return group_algebra(cyclic_group_table(n), CTX)


def characters(h, n):
    return [character_comodule(h, h.basis_vector(a), f"x^{a}") for a in range(n)]


def test_basic_comodules_validate():
    """Trivial, character and regular comodules satisfy both identities."""
    z3 = cyclic(3).hopf
    sweedler = taft(2, CTX.root(2)).hopf
    for h in (z3, sweedler):
        assert validate_comodule(trivial_comodule(h))
        assert validate_comodule(regular_comodule(h))
    assert validate_comodule(character_comodule(z3, z3.basis_vector(1), "x"))


def test_invalid_coefficients_are_reported():
    """x + x^2 is neither group-like nor counital."""
    h = cyclic(3).hopf
    u = make_comodule(h, [[[0, 1, 1]]], name="bad")
    report = validate_comodule(u)
    print(report.lines())
    assert not report.ok
    assert report.check("counit").witness == (0, 0)
    assert report.check("coassociativity").witness == (0, 0)
    with pytest.raises(NotGroupLike):
        character_comodule(h, [0, 1, 1])
    with pytest.raises(DimensionMismatch):
        make_comodule(h, [[[0, 1]]])


def test_tensor_and_dual_comodules():
    """Characters multiply under tensor products and invert under duals."""
    h = cyclic(3).hopf
    x = character_comodule(h, h.basis_vector(1), "x")
    square = tensor_comodule(x, x)
    assert square.name == "xx"
    assert square.coefficient(0, 0) == h.basis_vector(2)
    dual = dual_comodule(x)
    assert dual.name == "x*"
    assert dual.coefficient(0, 0) == h.basis_vector(2)
    assert hom_comodule(dual, square).dim == 1
    with pytest.raises(HostMismatch):
        tensor_comodule(x, trivial_comodule(cyclic(2).hopf))


def test_word_comodules():
    """U^x for words over {a, b}; the empty word is k."""
    h = cyclic(3).hopf
    x = character_comodule(h, h.basis_vector(1), "x")
    assert word_comodule(x, "").name == "1"
    ab = word_comodule(x, "ab")
    assert ab.name == "xx*"
    assert ab.coefficient(0, 0) == h.unit
    assert word_comodule(x, "aaa").coefficient(0, 0) == h.unit
    with pytest.raises(ValueError):
        word_comodule(x, "ac")


def test_faithful_comodules():
    """x generates k[Z6]; x^2 only reaches k[Z3]."""
    h = cyclic(6).hopf
    assert is_faithful_comodule(character_comodule(h, h.basis_vector(1), "x"))
    assert not is_faithful_comodule(character_comodule(h, h.basis_vector(2), "x^2"))
    assert is_faithful_comodule(regular_comodule(h))


def test_hom_dimensions():
    """Characters are simple and pairwise non-isomorphic; End(H) has dim H."""
    h = cyclic(3).hopf
    chars = characters(h, 3)
    for a in range(3):
        for b in range(3):
            assert hom_comodule(chars[a], chars[b]).dim == (1 if a == b else 0)
    assert hom_comodule(trivial_comodule(h), regular_comodule(h)).dim == 1
    for host in (h, taft(2, CTX.root(2)).hopf):
        regular = regular_comodule(host)
        end = hom_comodule(regular, regular)
        print(f"dim End(H) = {end.dim} for dim H = {host.dim}")
        assert end.dim == host.dim
        assert len(end.matrices()) == host.dim
        assert end.matrices()[0].rows == host.dim


def test_pi_morphisms_grow():
    """x -> -1 on k[Z4] makes k and x^2 isomorphic after pi."""
    h = cyclic(4).hopf
    r = cyclic_rep(4, -CTX.one)
    one, square = trivial_comodule(h), characters(h, 4)[2]
    assert hom_comodule(one, square).dim == 0
    assert hom_pi(r, one, square).dim == 1
    with pytest.raises(HostMismatch):
        hom_pi(cyclic_rep(3, CTX.one), one, square)


def test_factorization_hom_chain():
    """Hom_H in Hom_L in Hom_{H_pi} = Hom(U_pi, V_pi) through k[Z6] -> k[Z3]."""
    z6, z3 = cyclic(6), cyclic(3)
    h = z6.hopf
    q = group_morphism_hopf(z6, z3, [a % 3 for a in range(6)])
    r = cyclic_rep(6, CTX.root(3))
    projection = hopf_image(r).projection
    chars = characters(h, 6)
    chain = factorization_hom_chain(r, q, chars[1], chars[4], projection)
    print(f"Chain dimensions: {chain.dims()}")
    assert chain.holds
    assert tuple(chain.dims()) == (0, 1, 1, 1)
    with pytest.raises(HostMismatch):
        factorization_hom_chain(r, HopfMorphism.identity(z3.hopf), chars[1], chars[4], projection)


def test_tannaka_check_finds_a_gap():
    """x -> -1 on k[Z4] is caught by the pair (1, x^2)."""
    h = cyclic(4).hopf
    r = cyclic_rep(4, -CTX.one)
    chars = characters(h, 4)
    report = tannaka_equality_check(r, [(chars[0], chars[a]) for a in range(4)])
    assert report.chain_holds
    assert report.strict_pairs == [("x^0", "x^2")]
    assert report.conclusion is False
    assert report.engine_inner_faithful is False
    assert report.agrees


def test_tannaka_check_exhaustive_pairs():
    """x -> i on k[Z4] separates all simple comodules."""
    h = cyclic(4).hopf
    r = cyclic_rep(4, CTX.root(4))
    chars = characters(h, 4)
    pairs = [(u, v) for u in chars for v in chars]
    assert tannaka_equality_check(r, pairs).conclusion is None
    report = tannaka_equality_check(r, pairs, exhaustive=True)
    assert len(report.rows) == 16
    assert not report.strict_pairs
    assert report.conclusion is True
    assert report.agrees


def test_enumerate_words():
    """Shortlex order starting from the empty word."""
    assert list(enumerate_words("ab", 2)) == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert list(enumerate_words("a", 0)) == [""]


def test_truncated_criterion_violation():
    """Invariants of x (x) x jump under x -> -1."""
    h = cyclic(4).hopf
    r = cyclic_rep(4, -CTX.one)
    x = character_comodule(h, h.basis_vector(1), "x")
    verdict = truncated_fixedpoint_criterion(r, x, 3)
    print(verdict.describe())
    assert verdict.violated
    assert verdict.violated_at == "aa"
    assert verdict.words_checked == 4
    assert verdict.describe() == "ViolatedAt(aa)"
    assert verdict.faithful_comodule

    collapsed = truncated_fixedpoint_criterion(r, x, 3, self_dual=True)
    assert collapsed.violated_at == "aa"
    assert collapsed.words_checked == 3


def test_truncated_criterion_without_violation():
    """x -> i shows no violation, which is only evidence."""
    h = cyclic(4).hopf
    r = cyclic_rep(4, CTX.root(4))
    x = character_comodule(h, h.basis_vector(1), "x")
    verdict = truncated_fixedpoint_criterion(r, x, 3)
    assert not verdict.violated
    assert verdict.words_checked == 15
    assert verdict.describe() == "NoViolationUpTo(3)"

    square = character_comodule(h, h.basis_vector(2), "x^2")
    assert not truncated_fixedpoint_criterion(r, square, 1).faithful_comodule
    with pytest.raises(ValueError):
        truncated_fixedpoint_criterion(r, x, -1)
    with pytest.raises(HostMismatch):
        truncated_fixedpoint_criterion(cyclic_rep(3, CTX.one), x, 1)


def test_level_two_criterion():
    """pi_q on A(2, -1) passes all five conditions; the degraded map on A(2, +1) does not."""
    example = ake(2, -1, CTX)
    report = level_two_criterion(pi_q(example, CTX.root(4)), example.grouplikes, example.comodules)
    print(f"Conditions: {[(name, passed) for name, passed, _ in report.conditions]}")
    assert len(report.conditions) == 5
    assert report.holds
    assert report.engine_inner_faithful is True
    assert report.consistent

    plus = ake(2, 1, CTX)
    degraded = level_two_criterion(degraded_pi(plus), plus.grouplikes, plus.comodules)
    assert not degraded
    assert "group-likes separated" in degraded.failed()
    assert "u12 independent of u21" in degraded.failed()
    assert degraded.engine_inner_faithful is False
    assert degraded.consistent


def test_level_two_argument_checks():
    """Only two-dimensional comodules over the same host are accepted."""
    example = ake(2, -1, CTX)
    r = pi_q(example, CTX.root(4))
    with pytest.raises(DimensionMismatch):
        level_two_criterion(r, example.grouplikes, [trivial_comodule(example.hopf)])
    other = ake(3, -1, CTX)
    with pytest.raises(HostMismatch):
        level_two_criterion(r, example.grouplikes, other.comodules)


if __name__ == "__main__":
    test_basic_comodules_validate()
    test_invalid_coefficients_are_reported()
    test_tensor_and_dual_comodules()
    test_word_comodules()
    test_faithful_comodules()
    test_hom_dimensions()
    test_pi_morphisms_grow()
    test_factorization_hom_chain()
    test_tannaka_check_finds_a_gap()
    test_tannaka_check_exhaustive_pairs()
    test_enumerate_words()
    test_truncated_criterion_violation()
    test_truncated_criterion_without_violation()
    test_level_two_criterion()
    test_level_two_argument_checks()
    print("✅ All Tannakian criterion tests passed!")
