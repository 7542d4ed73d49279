"""
Subspaces in canonical reduced row-echelon form.

Every subspace of H or H* in the toolkit (kernels, ideals, closures,
Hom spaces) is a Subspace: its basis rows are the unique RREF of any
spanning set, so equality of subspaces is equality of bases.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.field.cyclotomic import CyclotomicContext, CyclotomicElement
from src.linalg.matrix import Matrix, Vector, rref_rows, unit_vector
from src.utils.error_handling import DimensionMismatch


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ctx^ambient given by its RREF basis."""
    ctx: CyclotomicContext
    ambient: int
    basis: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, ctx: CyclotomicContext, ambient: int,
             vectors: Sequence[Sequence[CyclotomicElement]]) -> "Subspace":
        for v in vectors:
            if len(v) != ambient:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient}")
        rows, pivots = rref_rows(ctx, vectors, ambient)
        return cls(ctx, ambient, tuple(tuple(r) for r in rows), tuple(pivots))

    @classmethod
    def zero(cls, ctx: CyclotomicContext, ambient: int) -> "Subspace":
        return cls(ctx, ambient, (), ())

    @classmethod
    def full(cls, ctx: CyclotomicContext, ambient: int) -> "Subspace":
        return cls(ctx, ambient, tuple(unit_vector(ctx, ambient, i) for i in range(ambient)),
                   tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def as_matrix(self) -> Matrix:
        return Matrix.from_rows(self.ctx, self.basis, self.ambient)

    def reduce(self, vector: Sequence[CyclotomicElement]) -> Vector:
        """Remainder of a vector after elimination against the basis."""
        work = list(vector)
        for row, pivot in zip(self.basis, self.pivots):
            c = work[pivot]
            if c:
                work = [x - c * r if r else x for x, r in zip(work, row)]
        return tuple(work)

    def contains_vector(self, vector: Sequence[CyclotomicElement]) -> bool:
        if len(vector) != self.ambient:
            raise DimensionMismatch(f"vector of length {len(vector)} in ambient dimension {self.ambient}")
        return not any(self.reduce(vector))

    def coordinates(self, vector: Sequence[CyclotomicElement]) -> Optional[Vector]:
        """Coefficients of vector in the RREF basis, or None when outside."""
        if not self.contains_vector(vector):
            return None
        return tuple(vector[p] for p in self.pivots)

    def contains(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(self.contains_vector(v) for v in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace.span(self.ctx, self.ambient, list(self.basis) + list(other.basis))


def _check_ambient(a: Subspace, b: Subspace):
    if a.ambient != b.ambient:
        raise DimensionMismatch(f"ambient dimensions differ: {a.ambient} vs {b.ambient}")


def kernel(m: Matrix) -> Subspace:
    """
    Right kernel {v : m v = 0}.

    Args:
        m: Any matrix

    Returns:
        Subspace of dimension cols - rank
    """
    rows, pivots = rref_rows(m.ctx, m.row_list(), m.cols)
    pivot_set = set(pivots)
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [m.ctx.zero] * m.cols
        v[free] = m.ctx.one
        for row, pivot in zip(rows, pivots):
            if row[free]:
                v[pivot] = -row[free]
        vectors.append(tuple(v))
    return Subspace.span(m.ctx, m.cols, vectors)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the system sum x_i a_i - sum y_j b_j = 0."""
    _check_ambient(a, b)
    if a.is_zero() or b.is_zero():
        return Subspace.zero(a.ctx, a.ambient)
    columns = list(a.basis) + [tuple(-x for x in v) for v in b.basis]
    system = Matrix.from_rows(a.ctx, columns, a.ambient).transpose()
    relations = kernel(system)
    vectors = []
    for relation in relations.basis:
        v = [a.ctx.zero] * a.ambient
        for coefficient, row in zip(relation[:a.dim], a.basis):
            if coefficient:
                v = [x + coefficient * r if r else x for x, r in zip(v, row)]
        vectors.append(tuple(v))
    return Subspace.span(a.ctx, a.ambient, vectors)


def subspace_ops(a: Subspace, b: Subspace, op: str) -> Union[Subspace, bool]:
    """
    Sum, intersection, containment (a contains b) or equality.

    Raises:
        DimensionMismatch: when the ambient dimensions differ
    """
    _check_ambient(a, b)
    if op == "sum":
        return a + b
    if op == "intersect":
        return intersection(a, b)
    if op == "contains":
        return a.contains(b)
    if op == "equals":
        return a.basis == b.basis
    raise ValueError(f"unknown subspace operation: {op}")


def annihilator(v: Subspace) -> Subspace:
    """Functionals vanishing on v, in the dual coordinates."""
    if v.is_zero():
        return Subspace.full(v.ctx, v.ambient)
    return kernel(v.as_matrix())


def quotient_data(v: Subspace) -> Tuple[Matrix, Matrix]:
    """
    Coordinates on ambient / v through the non-pivot complement of v.

    Returns:
        (projection of shape (d - r) x d, section of shape d x (d - r)) with
        projection @ section = identity and kernel(projection) = v
    """
    ctx = v.ctx
    d = v.ambient
    pivot_set = set(v.pivots)
    complement = [j for j in range(d) if j not in pivot_set]
    pivot_row: Dict[int, Vector] = dict(zip(v.pivots, v.basis))

    projection_rows: List[List[CyclotomicElement]] = []
    for j in complement:
        row = [ctx.zero] * d
        row[j] = ctx.one
        for pivot, basis_row in pivot_row.items():
            if basis_row[j]:
                row[pivot] = -basis_row[j]
        projection_rows.append(row)
    projection = Matrix.from_rows(ctx, projection_rows, d)

    section_rows = [[ctx.one if i == j else ctx.zero for j in complement] for i in range(d)]
    section = Matrix.from_rows(ctx, section_rows, len(complement))
    return projection, section


class EchelonBasis:
    """
    Incrementally maintained RREF basis.

    Fixpoint loops feed candidate vectors through add(); only vectors that
    enlarge the span are kept and reported back as new.
    """

    def __init__(self, ctx: CyclotomicContext, ambient: int):
        self.ctx = ctx
        self.ambient = ambient
        self._rows: Dict[int, List[CyclotomicElement]] = {}
        self.originals: List[Vector] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Sequence[CyclotomicElement]) -> List[CyclotomicElement]:
        work = list(vector)
        for pivot, row in self._rows.items():
            c = work[pivot]
            if c:
                work = [x - c * r if r else x for x, r in zip(work, row)]
        return work

    def contains(self, vector: Sequence[CyclotomicElement]) -> bool:
        return not any(self._reduce(vector))

    def add(self, vector: Sequence[CyclotomicElement]) -> bool:
        """
        Add a vector to the span.

        Returns:
            True when the span grew
        """
        if len(vector) != self.ambient:
            raise DimensionMismatch(f"vector of length {len(vector)} in ambient dimension {self.ambient}")
        work = self._reduce(vector)
        pivot = next((i for i, x in enumerate(work) if x), None)
        if pivot is None:
            return False
        lead = work[pivot]
        if lead != 1:
            inverse = lead.inverse()
            work = [x * inverse if x else x for x in work]
        for other_pivot, row in list(self._rows.items()):
            c = row[pivot]
            if c:
                self._rows[other_pivot] = [x - c * w if w else x for x, w in zip(row, work)]
        self._rows[pivot] = work
        self.originals.append(tuple(vector))
        return True

    def subspace(self) -> Subspace:
        pivots = sorted(self._rows)
        return Subspace(self.ctx, self.ambient,
                        tuple(tuple(self._rows[p]) for p in pivots), tuple(pivots))
