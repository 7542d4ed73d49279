"""
Hopf algebras as structure tensors, their axioms and basic constructions.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

from src.field.cyclotomic import CyclotomicContext, CyclotomicElement
from src.hopf.algebra import (
    AlgebraData, _check_algebra_axioms, dense_from_sparse, freeze, support
)
from src.hopf.report import ValidationReport
from src.hopf.tensor import (
    TensorElement, apply_comult, apply_counit, apply_linear, multiply_slots,
    pure_tensor, tensor_multiply
)
from src.linalg.matrix import Matrix, Vector, dot, kronecker, matmul, rref
from src.linalg.subspace import Subspace, kernel
from src.utils.error_handling import ContextMismatch, DimensionMismatch, ShapeMismatch


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopfAlgebraData:
    """
    A Hopf algebra on the basis of its underlying algebra.

    comult[i][j][k] is the coefficient of e_j (x) e_k in Delta(e_i); the
    antipode matrix has S(e_i) as its i-th column.
    """
    algebra: AlgebraData
    comult: Tuple[Tuple[Vector, ...], ...]
    counit: Vector
    antipode: Matrix

    def __post_init__(self):
        d = self.algebra.dim
        if len(self.comult) != d or any(len(row) != d for row in self.comult):
            raise DimensionMismatch(f"comultiplication tensor is not {d}x{d}x{d}")
        if len(self.counit) != d:
            raise DimensionMismatch(f"counit has length {len(self.counit)}, expected {d}")
        if self.antipode.rows != d or self.antipode.cols != d:
            raise DimensionMismatch(f"antipode is {self.antipode.rows}x{self.antipode.cols}, expected {d}x{d}")

    @classmethod
    def from_sparse(cls, ctx: CyclotomicContext, labels: Sequence[str],
                    mult: Iterable[tuple], unit: Sequence,
                    comult: Iterable[tuple], counit: Sequence,
                    antipode: Iterable[tuple]) -> "HopfAlgebraData":
        """
        Build from (i, j, k, scalar) and (i, j, scalar) entry lists; omitted entries are zero.

        Antipode entries (i, j, c) mean S(e_j) has coefficient c on e_i.
        """
        algebra = AlgebraData.from_sparse(ctx, labels, mult, unit)
        d = algebra.dim
        s = dense_from_sparse(ctx, d, antipode, 2)
        return cls(
            algebra,
            freeze(dense_from_sparse(ctx, d, comult, 3)),
            tuple(ctx.coerce(x) for x in counit),
            Matrix.from_rows(ctx, s, d),
        )

    # Convenience accessors

    @property
    def ctx(self) -> CyclotomicContext:
        return self.algebra.ctx

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.algebra.labels

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def unit(self) -> Vector:
        return self.algebra.unit

    @property
    def mult_terms(self):
        return self.algebra.mult_terms

    @cached_property
    def comult_terms(self) -> List[List[Tuple[int, int, CyclotomicElement]]]:
        terms = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                for k, c in support(self.comult[i][j]):
                    row.append((j, k, c))
            terms.append(row)
        return terms

    def basis_vector(self, i: int) -> Vector:
        return self.algebra.basis_vector(i)

    def multiply(self, x: Sequence[CyclotomicElement], y: Sequence[CyclotomicElement]) -> Vector:
        return self.algebra.multiply(x, y)

    def comultiply(self, x: Sequence[CyclotomicElement]) -> TensorElement:
        return apply_comult(self, pure_tensor(x), 0)

    def apply_counit(self, x: Sequence[CyclotomicElement]) -> CyclotomicElement:
        return dot(self.counit, x)

    def apply_antipode(self, x: Sequence[CyclotomicElement]) -> Vector:
        return self.antipode.apply(x)

    def tensor_square(self) -> List[AlgebraData]:
        return [self.algebra, self.algebra]


def validate(h: HopfAlgebraData, subject: str = "hopf algebra") -> ValidationReport:
    """
    Check every Hopf algebra axiom on basis elements.

    Entries appear in this order: associativity, left unit, right unit,
    coassociativity, left counit, right counit, comultiplication
    multiplicative, comultiplication unital, counit multiplicative, counit
    unital, left antipode, right antipode.

    Args:
        h: Structure to check
        subject: Name printed in the report header

    Returns:
        ValidationReport; failures carry the first offending basis tuple
    """
    report = ValidationReport(subject)
    _check_algebra_axioms(h.algebra, report)
    ctx = h.ctx
    d = h.dim
    delta = [apply_comult(h, {(i,): ctx.one}, 0) for i in range(d)]

    report.record("coassociativity", _first(
        (i,) for i in range(d) if apply_comult(h, delta[i], 0) != apply_comult(h, delta[i], 1)
    ))
    report.record("left counit", _first(
        (i,) for i in range(d) if apply_counit(h, delta[i], 0) != {(i,): ctx.one}
    ))
    report.record("right counit", _first(
        (i,) for i in range(d) if apply_counit(h, delta[i], 1) != {(i,): ctx.one}
    ))

    algebras = h.tensor_square()

    def comult_of_product(i, j):
        return h.comultiply(h.mult[i][j])

    report.record("comultiplication multiplicative", _first(
        (i, j) for i in range(d) for j in range(d)
        if comult_of_product(i, j) != tensor_multiply(algebras, delta[i], delta[j])
    ))
    report.record("comultiplication unital",
                  None if h.comultiply(h.unit) == pure_tensor(h.unit, h.unit) else (0,))
    report.record("counit multiplicative", _first(
        (i, j) for i in range(d) for j in range(d)
        if h.apply_counit(h.mult[i][j]) != h.counit[i] * h.counit[j]
    ))
    report.record("counit unital", None if h.apply_counit(h.unit) == 1 else (0,))

    def antipode_side(i, slot):
        folded = multiply_slots(h.algebra, apply_linear(h.antipode, delta[i], slot), 0)
        expected = pure_tensor(tuple(h.counit[i] * u for u in h.unit))
        return folded == expected

    report.record("left antipode", _first((i,) for i in range(d) if not antipode_side(i, 0)))
    report.record("right antipode", _first((i,) for i in range(d) if not antipode_side(i, 1)))

    if report.ok:
        logger.debug(f"{subject}: all {len(report.checks)} axioms pass (dim {d})")
    else:
        logger.info(f"{subject}: failed axioms {[c.name for c in report.failures()]}")
    return report


def _first(witnesses):
    return next(iter(witnesses), None)


def is_cocommutative(h: HopfAlgebraData) -> bool:
    return all(h.comult[i][j][k] == h.comult[i][k][j]
               for i in range(h.dim) for j in range(h.dim) for k in range(j + 1, h.dim))


def trivial_hopf(ctx: CyclotomicContext) -> HopfAlgebraData:
    """The one-dimensional Hopf algebra k."""
    return HopfAlgebraData.from_sparse(
        ctx, ["1"], [(0, 0, 0, 1)], [1], [(0, 0, 0, 1)], [1], [(0, 0, 1)]
    )


def dual(h: HopfAlgebraData, label_format: str = "{}*") -> HopfAlgebraData:
    """
    The dual Hopf algebra H* on the dual basis.

    Multiplication and comultiplication swap roles; unit and counit swap;
    the antipode is transposed.
    """
    d = h.dim
    mult = [(i, j, k, c) for k in range(d) for (i, j, c) in h.comult_terms[k]]
    comult = [(k, i, j, c) for (i, j), terms in h.mult_terms.items() for k, c in terms]
    antipode = [(i, j, h.antipode.get(j, i)) for i in range(d) for j in range(d)
                if h.antipode.get(j, i)]
    labels = [label_format.format(label) for label in h.labels]
    return HopfAlgebraData.from_sparse(h.ctx, labels, mult, h.counit, comult, h.unit, antipode)


def tensor_hopf(h: HopfAlgebraData, l: HopfAlgebraData) -> HopfAlgebraData:
    """
    H (x) L with basis index i * dim(L) + a and componentwise structure.
    """
    if h.ctx != l.ctx:
        raise ContextMismatch("tensor product of Hopf algebras over different fields")
    dl = l.dim
    mult = []
    for (i, j), left in h.mult_terms.items():
        for (a, b), right in l.mult_terms.items():
            for k, c in left:
                for r, s in right:
                    mult.append((i * dl + a, j * dl + b, k * dl + r, c * s))
    comult = []
    for i in range(h.dim):
        for a in range(dl):
            for j, k, c in h.comult_terms[i]:
                for b, r, s in l.comult_terms[a]:
                    comult.append((i * dl + a, j * dl + b, k * dl + r, c * s))
    labels = [f"({x},{y})" for x in h.labels for y in l.labels]
    unit = [x * y for x in h.unit for y in l.unit]
    counit = [x * y for x in h.counit for y in l.counit]
    s = kronecker(h.antipode, l.antipode)
    antipode = [(i, j, s.get(i, j)) for i in range(s.rows) for j in range(s.cols) if s.get(i, j)]
    return HopfAlgebraData.from_sparse(h.ctx, labels, mult, unit, comult, counit, antipode)


@dataclass(frozen=True)
class HopfMorphism:
    """A linear map source -> target given by a target.dim x source.dim matrix."""
    source: HopfAlgebraData
    target: HopfAlgebraData
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise ShapeMismatch(
                f"morphism matrix is {self.matrix.rows}x{self.matrix.cols}, "
                f"expected {self.target.dim}x{self.source.dim}"
            )

    @classmethod
    def identity(cls, h: HopfAlgebraData) -> "HopfMorphism":
        return cls(h, h, Matrix.identity(h.ctx, h.dim))

    def apply(self, x: Sequence[CyclotomicElement]) -> Vector:
        return self.matrix.apply(x)

    def kernel(self) -> Subspace:
        return kernel(self.matrix)

    def rank(self) -> int:
        return rref(self.matrix)[1]

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def compose(self, other: "HopfMorphism") -> "HopfMorphism":
        """self after other."""
        return HopfMorphism(other.source, self.target, matmul(self.matrix, other.matrix))


def validate_morphism(q: HopfMorphism, subject: str = "hopf morphism") -> ValidationReport:
    """
    Check that q intertwines all five structure maps on basis elements.
    """
    report = ValidationReport(subject)
    source, target = q.source, q.target
    d = source.dim
    images = [q.matrix.column(i) for i in range(d)]

    report.record("multiplicative", _first(
        (i, j) for i in range(d) for j in range(d)
        if q.apply(source.mult[i][j]) != target.multiply(images[i], images[j])
    ))
    report.record("unital", None if q.apply(source.unit) == target.unit else (0,))

    def pushed(i):
        t = apply_comult(source, {(i,): source.ctx.one}, 0)
        return apply_linear(q.matrix, apply_linear(q.matrix, t, 0), 1)

    report.record("comultiplicative", _first(
        (i,) for i in range(d) if pushed(i) != target.comultiply(images[i])
    ))
    report.record("counital", _first(
        (i,) for i in range(d) if target.apply_counit(images[i]) != source.counit[i]
    ))
    report.record("antipode", _first(
        (i,) for i in range(d)
        if q.apply(source.antipode.column(i)) != target.apply_antipode(images[i])
    ))
    return report
