"""
Representations: unital algebra maps from a Hopf algebra to an algebra.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

from src.hopf.algebra import AlgebraData, product_algebra, tensor_algebra
from src.hopf.report import ValidationReport
from src.hopf.structure import HopfAlgebraData, HopfMorphism, tensor_hopf
from src.linalg.matrix import Matrix, Vector, inverse, kronecker, matmul
from src.linalg.subspace import Subspace, kernel
from src.utils.error_handling import (
    ContextMismatch, InvalidRepresentation, ShapeMismatch, SingularSystem
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representation:
    """pi: H -> A as a dim(A) x dim(H) matrix whose i-th column is pi(e_i)."""
    source: HopfAlgebraData
    target: AlgebraData
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise ShapeMismatch(
                f"representation matrix is {self.matrix.rows}x{self.matrix.cols}, "
                f"expected {self.target.dim}x{self.source.dim}"
            )

    @property
    def ctx(self):
        return self.source.ctx

    def apply(self, x: Sequence) -> Vector:
        return self.matrix.apply(x)

    def image_of(self, i: int) -> Vector:
        return self.matrix.column(i)

    def kernel(self) -> Subspace:
        return kernel(self.matrix)

    def is_faithful(self) -> bool:
        return self.kernel().is_zero()


def validate_rep(r: Representation, subject: str = "representation") -> ValidationReport:
    """
    Check pi(1) = 1 and pi(e_i e_j) = pi(e_i) pi(e_j) for all basis pairs.
    """
    report = ValidationReport(subject)
    report.record("unital", None if r.apply(r.source.unit) == r.target.unit else (0,))
    d = r.source.dim
    images = [r.image_of(i) for i in range(d)]
    witness = None
    for i in range(d):
        for j in range(d):
            if r.apply(r.source.mult[i][j]) != r.target.multiply(images[i], images[j]):
                witness = (i, j)
                break
        if witness:
            break
    report.record("multiplicative", witness)
    return report


def require_valid(r: Representation):
    report = validate_rep(r)
    if not report.ok:
        failed = ", ".join(f"{c.name} at {c.witness}" for c in report.failures())
        raise InvalidRepresentation(f"not a unital algebra map: {failed}")


def counit_rep(h: HopfAlgebraData) -> Representation:
    """The counit as a representation on the one-dimensional algebra."""
    return Representation(h, product_algebra(h.ctx, 1), Matrix.from_rows(h.ctx, [h.counit], h.dim))


def identity_rep(h: HopfAlgebraData) -> Representation:
    """The identity map of H onto its underlying algebra."""
    return Representation(h, h.algebra, Matrix.identity(h.ctx, h.dim))


def hopf_map_rep(q: HopfMorphism) -> Representation:
    """A Hopf algebra map viewed as a representation on the target's algebra."""
    return Representation(q.source, q.target.algebra, q.matrix)


def tensor_rep(r: Representation, s: Representation) -> Representation:
    """
    pi (x) phi : H (x) L -> A (x) B, given by the Kronecker product.

    Basis indices follow tensor_hopf and tensor_algebra (i * dim(L) + a).
    """
    if r.ctx != s.ctx:
        raise ContextMismatch("tensor product of representations over different fields")
    return Representation(
        tensor_hopf(r.source, s.source),
        tensor_algebra(r.target, s.target),
        kronecker(r.matrix, s.matrix),
    )


def compose_with_target_isomorphism(r: Representation, theta: Matrix,
                                    target: AlgebraData = None) -> Representation:
    """
    theta o pi for an algebra isomorphism theta: A -> B.

    Args:
        r: Representation on A
        theta: Invertible dim(B) x dim(A) matrix of an algebra map
        target: B; defaults to A itself

    Raises:
        InvalidRepresentation: when theta is not an algebra isomorphism
    """
    target = target or r.target
    if not is_algebra_isomorphism(theta, r.target, target):
        raise InvalidRepresentation("theta is not an algebra isomorphism")
    return Representation(r.source, target, matmul(theta, r.matrix))


def is_algebra_isomorphism(theta: Matrix, a: AlgebraData, b: AlgebraData) -> bool:
    """Unital, multiplicative and invertible."""
    if theta.rows != b.dim or theta.cols != a.dim:
        raise ShapeMismatch(f"{theta.rows}x{theta.cols} matrix cannot map dim {a.dim} to dim {b.dim}")
    try:
        inverse(theta)
    except SingularSystem:
        return False
    if theta.apply(a.unit) != b.unit:
        return False
    images = [theta.column(i) for i in range(a.dim)]
    return all(theta.apply(a.mult[i][j]) == b.multiply(images[i], images[j])
               for i in range(a.dim) for j in range(a.dim))
