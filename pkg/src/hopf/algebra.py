"""
Finite-dimensional associative unital algebras by structure constants.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

from src.field.cyclotomic import CyclotomicContext, CyclotomicElement
from src.hopf.report import ValidationReport
from src.linalg.matrix import Vector, unit_vector, zero_vector
from src.utils.error_handling import ContextMismatch, DimensionMismatch


logger = logging.getLogger(__name__)

Terms = List[Tuple[int, CyclotomicElement]]


def support(vector: Sequence[CyclotomicElement]) -> Terms:
    return [(i, x) for i, x in enumerate(vector) if x]


def dense_from_sparse(ctx: CyclotomicContext, d: int, entries: Iterable[Tuple[int, ...]],
                      arity: int) -> list:
    """
    Expand (index..., scalar) entries into a nested list of the given arity.

    Omitted entries are zero; repeated entries accumulate.
    """
    def empty(level):
        if level == 1:
            return [ctx.zero] * d
        return [empty(level - 1) for _ in range(d)]

    dense = empty(arity)
    for entry in entries:
        *indices, value = entry
        target = dense
        for index in indices[:-1]:
            target = target[index]
        target[indices[-1]] = target[indices[-1]] + ctx.coerce(value)
    return dense


def freeze(nested) -> tuple:
    if isinstance(nested, list):
        return tuple(freeze(x) for x in nested)
    return nested


@dataclass(frozen=True)
class AlgebraData:
    """
    Algebra with basis e_0..e_{d-1}.

    mult[i][j][k] is the coefficient of e_k in e_i e_j; unit holds the
    coordinates of 1.
    """
    ctx: CyclotomicContext
    dim: int
    labels: Tuple[str, ...]
    mult: Tuple[Tuple[Vector, ...], ...]
    unit: Vector

    def __post_init__(self):
        if len(self.labels) != self.dim or len(self.unit) != self.dim:
            raise DimensionMismatch(f"algebra of dimension {self.dim} has inconsistent labels or unit")
        if len(self.mult) != self.dim or any(len(row) != self.dim for row in self.mult):
            raise DimensionMismatch(f"multiplication tensor is not {self.dim}x{self.dim}x{self.dim}")

    @classmethod
    def from_sparse(cls, ctx: CyclotomicContext, labels: Sequence[str],
                    mult: Iterable[Tuple[int, int, int, object]], unit: Sequence) -> "AlgebraData":
        d = len(labels)
        return cls(ctx, d, tuple(labels), freeze(dense_from_sparse(ctx, d, mult, 3)),
                   tuple(ctx.coerce(x) for x in unit))

    @cached_property
    def mult_terms(self) -> Dict[Tuple[int, int], Terms]:
        terms = {}
        for i in range(self.dim):
            for j in range(self.dim):
                nonzero = support(self.mult[i][j])
                if nonzero:
                    terms[(i, j)] = nonzero
        return terms

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.ctx, self.dim, i)

    def zero_vector(self) -> Vector:
        return zero_vector(self.ctx, self.dim)

    def multiply(self, x: Sequence[CyclotomicElement], y: Sequence[CyclotomicElement]) -> Vector:
        result = [self.ctx.zero] * self.dim
        right = support(y)
        for i, a in support(x):
            for j, b in right:
                terms = self.mult_terms.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms:
                        result[k] = result[k] + ab * c
        return tuple(result)

    def power(self, x: Sequence[CyclotomicElement], n: int) -> Vector:
        result = self.unit
        for _ in range(n):
            result = self.multiply(result, x)
        return result

    def product(self, factors: Iterable[Sequence[CyclotomicElement]]) -> Vector:
        result = self.unit
        for factor in factors:
            result = self.multiply(result, factor)
        return result


def validate_algebra(a: AlgebraData, subject: str = "algebra") -> ValidationReport:
    """
    Check associativity and the unit laws on basis triples.

    Args:
        a: Algebra to check
        subject: Name printed in the report header

    Returns:
        ValidationReport with entries associativity, left unit, right unit
    """
    report = ValidationReport(subject)
    _check_algebra_axioms(a, report)
    return report


def _check_algebra_axioms(a: AlgebraData, report: ValidationReport):
    witness = None
    for i in range(a.dim):
        for j in range(a.dim):
            left = a.mult[i][j]
            for k in range(a.dim):
                if a.multiply(left, a.basis_vector(k)) != a.multiply(a.basis_vector(i), a.mult[j][k]):
                    witness = (i, j, k)
                    break
            if witness:
                break
        if witness:
            break
    report.record("associativity", witness)

    left_witness = next((i for i in range(a.dim)
                         if a.multiply(a.unit, a.basis_vector(i)) != a.basis_vector(i)), None)
    report.record("left unit", None if left_witness is None else (left_witness,))
    right_witness = next((i for i in range(a.dim)
                          if a.multiply(a.basis_vector(i), a.unit) != a.basis_vector(i)), None)
    report.record("right unit", None if right_witness is None else (right_witness,))


def is_commutative(a: AlgebraData) -> bool:
    return all(a.mult[i][j] == a.mult[j][i] for i in range(a.dim) for j in range(i + 1, a.dim))


def matrix_algebra(ctx: CyclotomicContext, n: int) -> AlgebraData:
    """M_n with basis E_ij at index i*n + j."""
    entries = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                entries.append((i * n + j, j * n + l, i * n + l, 1))
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    unit = [1 if i % (n + 1) == 0 else 0 for i in range(n * n)]
    return AlgebraData.from_sparse(ctx, labels, entries, unit)


def product_algebra(ctx: CyclotomicContext, n: int) -> AlgebraData:
    """The commutative algebra k^n with orthogonal idempotent basis p_1..p_n."""
    entries = [(i, i, i, 1) for i in range(n)]
    return AlgebraData.from_sparse(ctx, [f"p{i + 1}" for i in range(n)], entries, [1] * n)


def tensor_algebra(a: AlgebraData, b: AlgebraData) -> AlgebraData:
    """A tensor B with basis index i * dim(B) + j and componentwise product."""
    if a.ctx != b.ctx:
        raise ContextMismatch("tensor product of algebras over different fields")
    db = b.dim
    entries = []
    for (i, j), left in a.mult_terms.items():
        for (p, q), right in b.mult_terms.items():
            for k, c in left:
                for r, s in right:
                    entries.append((i * db + p, j * db + q, k * db + r, c * s))
    labels = [f"({x},{y})" for x in a.labels for y in b.labels]
    unit = [x * y for x in a.unit for y in b.unit]
    return AlgebraData.from_sparse(a.ctx, labels, entries, unit)
