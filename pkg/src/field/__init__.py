"""Exact cyclotomic field arithmetic."""

from src.field.cyclotomic import (
    CyclotomicContext, CyclotomicElement, context_for, cyclotomic_polynomial,
    field_arith, root_of_unity_order, suggest_conductor
)
from src.field.parsing import format_scalar, parse_scalar
