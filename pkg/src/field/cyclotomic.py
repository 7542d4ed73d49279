"""
Exact arithmetic in the cyclotomic field Q(zeta_N).

Every scalar of the toolkit is a CyclotomicElement: a vector of phi(N)
rational coordinates in the power basis 1, zeta, ..., zeta^(phi(N)-1),
reduced modulo the N-th cyclotomic polynomial. One conductor is fixed per
session; roots of unity of order n | N are reached as zeta_N^(N/n).
"""

import logging
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import divisors, totient

from config import ROOT_ORDER_SEARCH_FACTOR
from src.field.polynomial import (
    Poly, poly_divmod, poly_gcdex, trim, x_power_minus_one
)
from src.utils.error_handling import ContextMismatch, DivisionByZero, WrongOrder


logger = logging.getLogger(__name__)

ScalarLike = Union["CyclotomicElement", int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[Fraction, ...]:
    """
    Compute Phi_n by dividing x^n - 1 by Phi_d for every proper divisor d.

    Args:
        n: Positive integer

    Returns:
        Coefficients of Phi_n, lowest degree first
    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    numerator: Poly = x_power_minus_one(n)
    for d in divisors(n):
        if d == n:
            continue
        quotient, remainder = poly_divmod(numerator, list(cyclotomic_polynomial(d)))
        if remainder:
            raise ArithmeticError(f"Phi_{d} does not divide x^{n} - 1")
        numerator = quotient
    return tuple(numerator)


class CyclotomicContext:
    """The field Q(zeta_N) for a fixed conductor N."""

    __slots__ = ("conductor", "degree", "modulus", "_reduction", "_zero", "_one", "_powers")

    def __init__(self, conductor: int):
        self.conductor = int(conductor)
        self.modulus: Tuple[Fraction, ...] = cyclotomic_polynomial(self.conductor)
        self.degree = len(self.modulus) - 1
        if self.degree != int(totient(self.conductor)):
            raise ArithmeticError(f"Phi_{conductor} has degree {self.degree}, expected phi(N)")

        # x^p mod Phi_N for degree <= p <= 2*degree - 2, used by multiplication
        self._reduction: Dict[int, Tuple[Fraction, ...]] = {}
        for p in range(self.degree, 2 * self.degree - 1):
            monomial = [Fraction(0)] * p + [Fraction(1)]
            _, remainder = poly_divmod(monomial, list(self.modulus))
            self._reduction[p] = self._pad(remainder)

        self._zero = CyclotomicElement(self, (Fraction(0),) * self.degree)
        self._one = CyclotomicElement(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))
        self._powers: Dict[int, CyclotomicElement] = {}

    def _pad(self, coefficients: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        padded = list(coefficients) + [Fraction(0)] * (self.degree - len(coefficients))
        return tuple(padded)

    @property
    def zero(self) -> "CyclotomicElement":
        return self._zero

    @property
    def one(self) -> "CyclotomicElement":
        return self._one

    def element(self, polynomial: Sequence[Rational]) -> "CyclotomicElement":
        """
        Build the element represented by an arbitrary polynomial in zeta.

        Args:
            polynomial: Coefficients of sum c_i zeta^i, lowest degree first

        Returns:
            The reduced element
        """
        poly = trim([Fraction(c) for c in polynomial])
        if len(poly) > self.degree:
            _, poly = poly_divmod(poly, list(self.modulus))
        return CyclotomicElement(self, self._pad(poly))

    def rational(self, value: Rational) -> "CyclotomicElement":
        value = Fraction(value)
        if value == 0:
            return self._zero
        if value == 1:
            return self._one
        return CyclotomicElement(self, (value,) + (Fraction(0),) * (self.degree - 1))

    def coerce(self, value: ScalarLike) -> "CyclotomicElement":
        if isinstance(value, CyclotomicElement):
            if value.context.conductor != self.conductor:
                raise ContextMismatch(
                    f"Q(zeta_{value.context.conductor}) element used in Q(zeta_{self.conductor})"
                )
            return value
        if isinstance(value, Rational):
            return self.rational(value)
        raise TypeError(f"cannot interpret {value!r} as a scalar of Q(zeta_{self.conductor})")

    def zeta(self, power: int = 1) -> "CyclotomicElement":
        """zeta_N raised to any integer power."""
        power %= self.conductor
        cached = self._powers.get(power)
        if cached is None:
            cached = self.element([0] * power + [1])
            self._powers[power] = cached
        return cached

    def root(self, order: int, power: int = 1) -> "CyclotomicElement":
        """
        The primitive root zeta_n = zeta_N^(N/n), raised to a power.

        Raises:
            WrongOrder: if n does not divide N
        """
        if order < 1 or self.conductor % order:
            raise WrongOrder(f"Q(zeta_{self.conductor}) has no primitive root of order {order}")
        return self.zeta((self.conductor // order) * power)

    def roots_of_unity(self) -> List["CyclotomicElement"]:
        """All roots of unity of the field: +-zeta^k."""
        found: List[CyclotomicElement] = []
        for k in range(self.conductor):
            for candidate in (self.zeta(k), -self.zeta(k)):
                if candidate not in found:
                    found.append(candidate)
        return found

    def __eq__(self, other):
        return isinstance(other, CyclotomicContext) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("CyclotomicContext", self.conductor))

    def __repr__(self):
        return f"CyclotomicContext({self.conductor})"


@lru_cache(maxsize=None)
def context_for(conductor: int) -> CyclotomicContext:
    """Shared context per conductor."""
    logger.debug(f"Creating cyclotomic context for N={conductor}")
    return CyclotomicContext(conductor)


class CyclotomicElement:
    """An immutable element of Q(zeta_N)."""

    __slots__ = ("context", "coefficients", "_rational")

    def __init__(self, context: CyclotomicContext, coefficients: Tuple[Fraction, ...]):
        self.context = context
        self.coefficients = coefficients
        self._rational = not any(coefficients[1:])

    # Structure

    def is_zero(self) -> bool:
        return self._rational and not self.coefficients[0]

    def is_rational(self) -> bool:
        return self._rational

    def rational_value(self) -> Optional[Fraction]:
        return Fraction(self.coefficients[0]) if self._rational else None

    def __bool__(self):
        return not self.is_zero()

    def _other(self, other: ScalarLike) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            if other.context is not self.context and other.context.conductor != self.context.conductor:
                raise ContextMismatch(
                    f"cannot combine Q(zeta_{self.context.conductor}) "
                    f"and Q(zeta_{other.context.conductor}) elements"
                )
            return other
        return self.context.coerce(other)

    # Arithmetic

    def __add__(self, other: ScalarLike) -> "CyclotomicElement":
        other = self._other(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        return CyclotomicElement(
            self.context, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicElement":
        if self.is_zero():
            return self
        return CyclotomicElement(self.context, tuple(-a for a in self.coefficients))

    def __sub__(self, other: ScalarLike) -> "CyclotomicElement":
        other = self._other(other)
        if other.is_zero():
            return self
        return CyclotomicElement(
            self.context, tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __rsub__(self, other: ScalarLike) -> "CyclotomicElement":
        return self._other(other) - self

    def __mul__(self, other: ScalarLike) -> "CyclotomicElement":
        other = self._other(other)
        if self.is_zero() or other.is_zero():
            return self.context.zero
        if other._rational:
            c = other.coefficients[0]
            if c == 1:
                return self
            return CyclotomicElement(self.context, tuple(a * c for a in self.coefficients))
        if self._rational:
            c = self.coefficients[0]
            if c == 1:
                return other
            return CyclotomicElement(self.context, tuple(c * b for b in other.coefficients))

        degree = self.context.degree
        product = [Fraction(0)] * (2 * degree - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    if b:
                        product[i + j] += a * b
        result = product[:degree]
        reduction = self.context._reduction
        for p in range(degree, 2 * degree - 1):
            c = product[p]
            if c:
                for t, r in enumerate(reduction[p]):
                    if r:
                        result[t] += c * r
        return CyclotomicElement(self.context, tuple(result))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        """
        Multiplicative inverse via the extended Euclidean algorithm in Q[x]/Phi_N.

        Raises:
            DivisionByZero: for the zero element
        """
        if self.is_zero():
            raise DivisionByZero("division by zero in the cyclotomic field")
        if self._rational:
            return self.context.rational(1 / Fraction(self.coefficients[0]))
        s, _, g = poly_gcdex(trim(self.coefficients), list(self.context.modulus))
        if g != [1]:
            raise ArithmeticError("element shares a factor with the cyclotomic modulus")
        return self.context.element(s)

    def __truediv__(self, other: ScalarLike) -> "CyclotomicElement":
        return self * self._other(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> "CyclotomicElement":
        return self._other(other) * self.inverse()

    def __pow__(self, exponent: int) -> "CyclotomicElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.context.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return (other.context.conductor == self.context.conductor
                    and other.coefficients == self.coefficients)
        if isinstance(other, Rational):
            return self._rational and self.coefficients[0] == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._rational:
            return hash(Fraction(self.coefficients[0]))
        return hash((self.context.conductor, self.coefficients))

    def __str__(self):
        from src.field.parsing import format_scalar
        return format_scalar(self)

    def __repr__(self):
        return f"CyclotomicElement(N={self.context.conductor}, '{self}')"


def field_arith(a: CyclotomicElement, b: CyclotomicElement, op: str) -> CyclotomicElement:
    """
    Apply one of the four field operations by name.

    Args:
        a: Left operand
        b: Right operand, nonzero for "div"
        op: One of "add", "sub", "mul", "div"

    Returns:
        The reduced result
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation: {op}")


def root_of_unity_order(a: CyclotomicElement) -> Optional[int]:
    """
    Multiplicative order of a root of unity.

    Roots of unity in Q(zeta_N) have order dividing lcm(2, N), so the
    search stops after ROOT_ORDER_SEARCH_FACTOR * N powers.

    Returns:
        The order, or None when a is not a root of unity
    """
    if a.is_zero():
        return None
    bound = ROOT_ORDER_SEARCH_FACTOR * a.context.conductor
    power = a
    for n in range(1, bound + 1):
        if power == 1:
            return n
        power = power * a
    return None


def suggest_conductor(orders: Sequence[int]) -> int:
    """Smallest conductor containing roots of unity of every requested order."""
    from math import lcm
    result = 1
    for order in orders:
        result = lcm(result, int(order))
    return result
