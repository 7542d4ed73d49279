"""
Canonical text form of cyclotomic scalars.

Grammar: signed terms joined by '+' or '-', each term a rational
coefficient, the symbol z (for zeta_N), or `coefficient*z^k`. Output lists
terms in increasing power with reduced rationals and no zero terms.
"""

import re
from fractions import Fraction
from typing import List, Optional

from config import SCALAR_SYMBOL
from src.field.cyclotomic import CyclotomicContext, CyclotomicElement
from src.utils.error_handling import ParseError


_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<symbol>[A-Za-z_]+)|(?P<op>[-+*^]))"
)


def _tokenize(text: str) -> List[tuple]:
    tokens = []
    position = 0
    stripped_end = len(text.rstrip())
    while position < stripped_end:
        match = _TOKEN.match(text, position)
        if not match or match.end() == position:
            while text[position].isspace():
                position += 1
            raise ParseError(f"unexpected character {text[position]!r}", position)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start))
        position = match.end()
    tokens.append(("end", "", stripped_end))
    return tokens


def _rational(literal: str, position: int) -> Fraction:
    numerator, _, denominator = literal.partition("/")
    if denominator and int(denominator) == 0:
        raise ParseError("zero denominator", position)
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def parse_scalar(text: str, ctx: CyclotomicContext) -> CyclotomicElement:
    """
    Parse a scalar expression into an element of ctx.

    Args:
        text: Expression such as "-1/2*z^2 + 3"
        ctx: Target cyclotomic field

    Returns:
        The reduced element

    Raises:
        ParseError: with the character position of the first error
    """
    tokens = _tokenize(text)
    if tokens[0][0] == "end":
        raise ParseError("empty expression", 0)

    coefficients: dict = {}
    index = 0
    first = True
    while True:
        kind, value, position = tokens[index]
        sign = 1
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            index += 1
        elif not first:
            raise ParseError(f"expected '+' or '-', found {value or 'end of input'!r}", position)
        first = False

        kind, value, position = tokens[index]
        coefficient: Optional[Fraction] = None
        power = 0
        if kind == "number":
            coefficient = _rational(value, position)
            index += 1
            kind, value, position = tokens[index]
            if kind == "op" and value == "*":
                index += 1
                kind, value, position = tokens[index]
                if kind != "symbol":
                    raise ParseError(f"expected {SCALAR_SYMBOL!r} after '*'", position)
        if kind == "symbol":
            if value != SCALAR_SYMBOL:
                raise ParseError(f"unknown symbol {value!r}", position)
            power = 1
            index += 1
            kind, value, position = tokens[index]
            if kind == "op" and value == "^":
                index += 1
                kind, value, position = tokens[index]
                if kind != "number" or "/" in value:
                    raise ParseError("expected a nonnegative integer exponent", position)
                power = int(value)
                index += 1
        elif coefficient is None:
            raise ParseError(f"expected a term, found {value or 'end of input'!r}", position)

        if coefficient is None:
            coefficient = Fraction(1)
        coefficients[power] = coefficients.get(power, Fraction(0)) + sign * coefficient

        if tokens[index][0] == "end":
            break

    polynomial = [Fraction(0)] * (max(coefficients) + 1)
    for power, value in coefficients.items():
        polynomial[power] += value
    return ctx.element(polynomial)


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(a: CyclotomicElement) -> str:
    """Canonical text of a scalar; "0" for zero."""
    parts: List[str] = []
    for power, raw in enumerate(a.coefficients):
        if not raw:
            continue
        value = Fraction(raw)
        magnitude = abs(value)
        if power == 0:
            body = _format_rational(magnitude)
        else:
            monomial = SCALAR_SYMBOL if power == 1 else f"{SCALAR_SYMBOL}^{power}"
            body = monomial if magnitude == 1 else f"{_format_rational(magnitude)}*{monomial}"
        if not parts:
            parts.append(f"-{body}" if value < 0 else body)
        else:
            parts.append(f" - {body}" if value < 0 else f" + {body}")
    return "".join(parts) if parts else "0"
