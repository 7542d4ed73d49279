"""
Dense univariate polynomials over the rationals.

Polynomials are lists of Fractions, lowest degree first, with no trailing
zeros (the zero polynomial is the empty list).
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

Poly = List[Fraction]


def trim(p: Sequence[Fraction]) -> Poly:
    """Drop trailing zero coefficients."""
    result = list(p)
    while result and result[-1] == 0:
        result.pop()
    return result


def poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    if not a or not b:
        return []
    result = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                result[i + j] += x * y
    return trim(result)


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> Tuple[Poly, Poly]:
    """
    Exact long division over Q.

    Args:
        a: Dividend
        b: Nonzero divisor

    Returns:
        (quotient, remainder) with deg(remainder) < deg(b)
    """
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    remainder = [Fraction(c) for c in trim(a)]
    if len(remainder) < len(b):
        return [], remainder
    lead = b[-1]
    quotient = [Fraction(0)] * (len(remainder) - len(b) + 1)
    for shift in range(len(remainder) - len(b), -1, -1):
        coefficient = remainder[shift + len(b) - 1] / lead
        quotient[shift] = coefficient
        if coefficient:
            for i, c in enumerate(b):
                remainder[shift + i] -= coefficient * c
    return trim(quotient), trim(remainder[:len(b) - 1])


def poly_gcdex(a: Sequence[Fraction], b: Sequence[Fraction]) -> Tuple[Poly, Poly, Poly]:
    """
    Extended Euclidean algorithm over Q.

    Returns:
        (s, t, g) with s*a + t*b = g and g monic
    """
    r0, r1 = trim(a), trim(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if not r0:
        return s0, t0, r0
    lead = r0[-1]
    return ([c / lead for c in s0], [c / lead for c in t0], [c / lead for c in r0])


def x_power_minus_one(n: int) -> Poly:
    """The polynomial x^n - 1."""
    return [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
