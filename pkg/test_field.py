#!/usr/bin/env python3
"""
Tests for cyclotomic field arithmetic and the scalar grammar.
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent.absolute()
sys.path.insert(0, str(project_root))

import pytest
from sympy import Poly, cyclotomic_poly, symbols, totient

from src.field import (
    context_for, cyclotomic_polynomial, field_arith, format_scalar, parse_scalar,
    root_of_unity_order, suggest_conductor
)
from src.field.polynomial import poly_divmod, x_power_minus_one
from src.utils.error_handling import ContextMismatch, DivisionByZero, ParseError, WrongOrder


def test_cyclotomic_polynomials_match_sympy():
    """Phi_N divides x^N - 1 exactly and agrees with sympy for every N <= 120."""
    x = symbols("x")
    for n in range(1, 121):
        phi = list(cyclotomic_polynomial(n))
        _, remainder = poly_divmod(x_power_minus_one(n), phi)
        assert remainder == [], f"Phi_{n} leaves a remainder"
        assert len(phi) - 1 == totient(n)
        expected = [int(c) for c in reversed(Poly(cyclotomic_poly(n, x), x).all_coeffs())]
        assert [int(c) for c in phi] == expected, f"Phi_{n} differs"


def test_context_degree_and_caching():
    """Q(zeta_12) has degree 4 and one shared context."""
    ctx = context_for(12)
    assert ctx.degree == 4
    assert context_for(12) is ctx


def test_zeta_powers_reduce():
    """zeta_12^6 = -1 and zeta_12^4 = zeta_12^2 - 1."""
    ctx = context_for(12)
    z = ctx.zeta(1)
    assert z ** 12 == 1
    assert z ** 6 == -1
    assert z ** 4 == z ** 2 - 1
    assert format_scalar(z ** 4) == "-1 + z^2"


def test_field_operations():
    """Addition, subtraction, multiplication and division round out."""
    ctx = context_for(12)
    a = ctx.one + ctx.zeta(1)
    b = ctx.zeta(3) - 2
    assert field_arith(a, b, "add") == a + b
    assert field_arith(field_arith(a, b, "mul"), b, "div") == a
    assert field_arith(a, a, "sub") == 0
    assert a * a.inverse() == 1
    with pytest.raises(ValueError):
        field_arith(a, b, "pow")


def random_element(ctx, rng):
    return ctx.element([Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(ctx.degree)])


def test_field_axioms_on_random_triples():
    """Ring laws and inverses hold for random elements of Q(zeta_12)."""
    ctx = context_for(12)
    rng = random.Random(2024)
    for _ in range(60):
        a, b, c = (random_element(ctx, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + ctx.zero == a and a * ctx.one == a
        assert a - a == 0
        if a:
            assert a * a.inverse() == 1
            assert (b / a) * a == b


def test_division_by_zero():
    """Inverting zero raises DivisionByZero, which is also a ZeroDivisionError."""
    ctx = context_for(12)
    with pytest.raises(DivisionByZero):
        ctx.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        ctx.one / ctx.zero


def test_context_mismatch():
    """Elements of different fields do not combine."""
    with pytest.raises(ContextMismatch):
        context_for(12).zeta(1) + context_for(5).zeta(1)


def test_roots_of_unity():
    """root(n) is primitive of order n and fails when n does not divide N."""
    ctx = context_for(12)
    for n in (1, 2, 3, 4, 6, 12):
        assert root_of_unity_order(ctx.root(n)) == n
    assert root_of_unity_order(ctx.rational(2)) is None
    assert root_of_unity_order(ctx.zero) is None
    assert root_of_unity_order(-ctx.one) == 2
    with pytest.raises(WrongOrder):
        ctx.root(5)
    assert len(ctx.roots_of_unity()) == 12


def test_parse_and_format_canonical():
    """Parsing then formatting yields the canonical text."""
    ctx = context_for(12)
    a = parse_scalar("-1/2*z^2 + 3", ctx)
    assert format_scalar(a) == "3 - 1/2*z^2"
    assert format_scalar(parse_scalar("2/4", ctx)) == "1/2"
    assert format_scalar(parse_scalar("z - z", ctx)) == "0"
    assert parse_scalar("z^6", ctx) == -1
    assert str(parse_scalar("-z", ctx)) == "-z"


def test_parse_errors_carry_positions():
    """ParseError reports where the expression breaks."""
    ctx = context_for(12)
    cases = [("3 + * z", 4), ("3 & 4", 2), ("1/0", 0), ("", 0), ("2 w", 2)]
    for text, position in cases:
        with pytest.raises(ParseError) as info:
            parse_scalar(text, ctx)
        assert info.value.position == position, f"{text!r}: position {info.value.position}"


def test_rational_coercion():
    """Fractions and ints coerce to field elements."""
    ctx = context_for(12)
    assert ctx.coerce(Fraction(3, 4)) * 4 == 3
    assert 2 * ctx.zeta(1) == ctx.zeta(1) + ctx.zeta(1)


def test_suggest_conductor():
    """The suggested conductor contains every requested root order."""
    assert suggest_conductor([3, 4, 6]) == 12
    assert suggest_conductor([5, 2]) == 10


if __name__ == "__main__":
    test_cyclotomic_polynomials_match_sympy()
    test_context_degree_and_caching()
    test_zeta_powers_reduce()
    test_field_operations()
    test_field_axioms_on_random_triples()
    test_division_by_zero()
    test_context_mismatch()
    test_roots_of_unity()
    test_parse_and_format_canonical()
    test_parse_errors_carry_positions()
    test_rational_coercion()
    test_suggest_conductor()
    print("✅ All field tests passed!")
