"""
Dense matrices and vectors over a cyclotomic field.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from src.field.cyclotomic import CyclotomicContext, CyclotomicElement
from src.utils.error_handling import ShapeMismatch, SingularSystem


logger = logging.getLogger(__name__)

Vector = Tuple[CyclotomicElement, ...]


def zero_vector(ctx: CyclotomicContext, n: int) -> Vector:
    return (ctx.zero,) * n


def unit_vector(ctx: CyclotomicContext, n: int, i: int) -> Vector:
    return tuple(ctx.one if j == i else ctx.zero for j in range(n))


def vec_add(a: Sequence[CyclotomicElement], b: Sequence[CyclotomicElement]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[CyclotomicElement], b: Sequence[CyclotomicElement]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a: Sequence[CyclotomicElement]) -> Vector:
    return tuple(c * x for x in a)


def dot(a: Sequence[CyclotomicElement], b: Sequence[CyclotomicElement]):
    if not a:
        raise ShapeMismatch("dot product of empty vectors")
    total = a[0].context.zero
    for x, y in zip(a, b):
        if x and y:
            total = total + x * y
    return total


def is_zero_vector(a: Iterable[CyclotomicElement]) -> bool:
    return not any(a)


@dataclass(frozen=True)
class Matrix:
    """A rows x cols matrix stored row-major."""
    ctx: CyclotomicContext
    rows: int
    cols: int
    entries: Tuple[CyclotomicElement, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, ctx: CyclotomicContext, rows: Sequence[Sequence], cols: int = None) -> "Matrix":
        rows = [tuple(ctx.coerce(x) for x in row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ShapeMismatch(f"ragged row of length {len(row)}, expected {cols}")
        entries = tuple(x for row in rows for x in row)
        return cls(ctx, len(rows), cols, entries)

    @classmethod
    def zeros(cls, ctx: CyclotomicContext, rows: int, cols: int) -> "Matrix":
        return cls(ctx, rows, cols, (ctx.zero,) * (rows * cols))

    @classmethod
    def identity(cls, ctx: CyclotomicContext, n: int) -> "Matrix":
        return cls(ctx, n, n, tuple(ctx.one if i == j else ctx.zero
                                    for i in range(n) for j in range(n)))

    def get(self, i: int, j: int) -> CyclotomicElement:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows(self.ctx, [self.column(j) for j in range(self.cols)], self.rows)

    def apply(self, vector: Sequence[CyclotomicElement]) -> Vector:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise ShapeMismatch(f"cannot apply {self.rows}x{self.cols} matrix to length {len(vector)}")
        support = [(j, x) for j, x in enumerate(vector) if x]
        result = []
        for i in range(self.rows):
            offset = i * self.cols
            total = self.ctx.zero
            for j, x in support:
                a = self.entries[offset + j]
                if a:
                    total = total + a * x
            result.append(total)
        return tuple(result)

    def apply_left(self, vector: Sequence[CyclotomicElement]) -> Vector:
        """Row vector times matrix."""
        if len(vector) != self.rows:
            raise ShapeMismatch(f"cannot apply length {len(vector)} row to {self.rows}x{self.cols} matrix")
        result = [self.ctx.zero] * self.cols
        for i, x in enumerate(vector):
            if not x:
                continue
            offset = i * self.cols
            for j in range(self.cols):
                a = self.entries[offset + j]
                if a:
                    result[j] = result[j] + x * a
        return tuple(result)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def is_zero(self) -> bool:
        return not any(self.entries)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    rows = [b.apply_left(a.row(i)) for i in range(a.rows)]
    return Matrix(a.ctx, a.rows, b.cols, tuple(x for row in rows for x in row))


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row (i, k) of the result is i * b.rows + k."""
    entries = []
    for i in range(a.rows):
        for k in range(b.rows):
            for j in range(a.cols):
                x = a.get(i, j)
                for l in range(b.cols):
                    entries.append(x * b.get(k, l) if x else a.ctx.zero)
    return Matrix(a.ctx, a.rows * b.rows, a.cols * b.cols, tuple(entries))


def rref_rows(ctx: CyclotomicContext, rows: Sequence[Sequence[CyclotomicElement]],
              cols: int) -> Tuple[List[List[CyclotomicElement]], List[int]]:
    """
    Gauss-Jordan elimination with the first nonzero entry of a column as pivot.

    Returns:
        (nonzero reduced rows, pivot columns)
    """
    work = [list(row) for row in rows]
    pivots: List[int] = []
    rank = 0
    for col in range(cols):
        pivot_row = None
        for r in range(rank, len(work)):
            if work[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        lead = work[rank][col]
        if lead != 1:
            inverse = lead.inverse()
            work[rank] = [x * inverse if x else x for x in work[rank]]
        pivot = work[rank]
        for r in range(len(work)):
            if r != rank:
                factor = work[r][col]
                if factor:
                    work[r] = [x - factor * p if p else x for x, p in zip(work[r], pivot)]
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return work[:rank], pivots


def rref(m: Matrix) -> Tuple[Matrix, int]:
    """
    Reduced row-echelon form of m without zero rows.

    Returns:
        (RREF matrix, rank)
    """
    rows, pivots = rref_rows(m.ctx, m.row_list(), m.cols)
    return Matrix.from_rows(m.ctx, rows, m.cols), len(pivots)


def solve(m: Matrix, b: Sequence[CyclotomicElement]) -> Vector:
    """
    A particular solution of m x = b (free variables set to zero).

    Raises:
        SingularSystem: when the system is inconsistent
    """
    if len(b) != m.rows:
        raise ShapeMismatch(f"right-hand side has length {len(b)}, expected {m.rows}")
    augmented = [list(m.row(i)) + [m.ctx.coerce(b[i])] for i in range(m.rows)]
    rows, pivots = rref_rows(m.ctx, augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        raise SingularSystem("linear system has no solution")
    solution = [m.ctx.zero] * m.cols
    for row, col in zip(rows, pivots):
        solution[col] = row[m.cols]
    return tuple(solution)


def inverse(m: Matrix) -> Matrix:
    """Inverse of a square matrix; SingularSystem when it does not exist."""
    if m.rows != m.cols:
        raise ShapeMismatch(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    augmented = [list(m.row(i)) + list(unit_vector(m.ctx, n, i)) for i in range(n)]
    rows, pivots = rref_rows(m.ctx, augmented, 2 * n)
    if pivots != list(range(n)):
        raise SingularSystem("matrix is not invertible")
    return Matrix.from_rows(m.ctx, [row[n:] for row in rows], n)


def trace(m: Matrix) -> CyclotomicElement:
    total = m.ctx.zero
    for i in range(min(m.rows, m.cols)):
        total = total + m.get(i, i)
    return total


def charpoly(m: Matrix) -> List[CyclotomicElement]:
    """
    Characteristic polynomial det(xI - m) by the Faddeev-LeVerrier recurrence.

    Returns:
        Coefficients, lowest degree first, monic of degree n
    """
    if m.rows != m.cols:
        raise ShapeMismatch("characteristic polynomial of a non-square matrix")
    n = m.rows
    ctx = m.ctx
    coefficients = [ctx.zero] * (n + 1)
    coefficients[n] = ctx.one
    identity = Matrix.identity(ctx, n)
    previous = Matrix.zeros(ctx, n, n)
    for k in range(1, n + 1):
        shifted = matmul(m, previous)
        c = coefficients[n - k + 1]
        current = Matrix(ctx, n, n, tuple(
            x + c * y if y else x for x, y in zip(shifted.entries, identity.entries)
        ))
        coefficients[n - k] = -(trace(matmul(m, current)) / k)
        previous = current
    return coefficients
