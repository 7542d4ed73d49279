"""
Group-like elements: verification of candidates and discovery by
simultaneous eigenvectors.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Poly, QQ, Symbol

from config import GROUPLIKE_SEARCH_RATIONAL_ROOTS
from src.field.cyclotomic import CyclotomicElement
from src.hopf.structure import HopfAlgebraData, is_cocommutative
from src.hopf.tensor import pure_tensor
from src.linalg.matrix import Matrix, Vector, charpoly, unit_vector
from src.linalg.subspace import Subspace, kernel
from src.utils.error_handling import NotClosed


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupLikeSet:
    """
    Group-like elements of a Hopf algebra with their group law.

    table[a][b] is the index of g_a g_b; inverses[a] the index of S(g_a).
    complete is False when the search could not rule out further elements.
    """
    host: HopfAlgebraData
    elements: Tuple[Vector, ...]
    table: Tuple[Tuple[int, ...], ...]
    inverses: Tuple[int, ...]
    complete: bool = True

    def __len__(self):
        return len(self.elements)

    @property
    def identity(self) -> int:
        return self.elements.index(self.host.unit)

    def index_of(self, vector: Sequence) -> Optional[int]:
        vector = tuple(vector)
        return self.elements.index(vector) if vector in self.elements else None

    def span(self) -> Subspace:
        return Subspace.span(self.host.ctx, self.host.dim, list(self.elements))

    def order_of(self, a: int) -> int:
        n, current = 1, a
        while current != self.identity:
            current = self.table[current][a]
            n += 1
        return n


def is_grouplike(h: HopfAlgebraData, g: Sequence) -> bool:
    """Delta(g) = g (x) g and epsilon(g) = 1."""
    return h.apply_counit(g) == 1 and h.comultiply(g) == pure_tensor(g, g)


def verify_grouplikes(h: HopfAlgebraData, candidates: Sequence[Sequence],
                      complete: bool = True) -> GroupLikeSet:
    """
    Keep the candidates that are group-like and tabulate their group law.

    Args:
        h: Host Hopf algebra
        candidates: Coordinate vectors; duplicates and non-group-likes are dropped
        complete: Recorded on the result

    Returns:
        GroupLikeSet in candidate order

    Raises:
        NotClosed: when a product or antipode image leaves the set
    """
    elements: List[Vector] = []
    for candidate in candidates:
        vector = tuple(h.ctx.coerce(x) for x in candidate)
        if vector not in elements and is_grouplike(h, vector):
            elements.append(vector)
    dropped = len(candidates) - len(elements)
    if dropped:
        logger.debug(f"Dropped {dropped} candidates that are duplicates or not group-like")

    position = {g: a for a, g in enumerate(elements)}
    table = []
    for a, g in enumerate(elements):
        row = []
        for b, k in enumerate(elements):
            product = h.multiply(g, k)
            if product not in position:
                raise NotClosed(f"product of group-likes {a} and {b} is not in the set", witness=product)
            row.append(position[product])
        table.append(tuple(row))
    inverses = []
    for a, g in enumerate(elements):
        image = h.apply_antipode(g)
        if image not in position:
            raise NotClosed(f"antipode of group-like {a} is not in the set", witness=image)
        inverses.append(position[image])
    return GroupLikeSet(h, tuple(elements), tuple(table), tuple(inverses), complete)


def _evaluate(coefficients: Sequence[CyclotomicElement], x: CyclotomicElement) -> CyclotomicElement:
    value = x.context.zero
    for c in reversed(coefficients):
        value = value * x + c
    return value


def _deflate(coefficients: List[CyclotomicElement], root: CyclotomicElement) -> List[CyclotomicElement]:
    """Synthetic division by (x - root); the remainder is assumed zero."""
    n = len(coefficients) - 1
    quotient = [root.context.zero] * n
    carry = root.context.zero
    for k in range(n, 0, -1):
        carry = coefficients[k] + carry * root
        quotient[k - 1] = carry
    return quotient


def _rational_roots(coefficients: Sequence[CyclotomicElement]) -> List[Fraction]:
    if not GROUPLIKE_SEARCH_RATIONAL_ROOTS or not all(c.is_rational() for c in coefficients):
        return []
    x = Symbol("x")
    poly = Poly([c.rational_value() for c in reversed(coefficients)], x, domain=QQ)
    return [Fraction(int(root.p), int(root.q)) for root in poly.ground_roots()]


def _field_roots(coefficients: List[CyclotomicElement]) -> Tuple[List[CyclotomicElement], bool]:
    """
    Roots of a polynomial found among 0, the roots of unity and rational numbers.

    Returns:
        (distinct roots, True when their multiplicities account for the degree)
    """
    ctx = coefficients[0].context
    candidates = [ctx.zero] + ctx.roots_of_unity()
    for value in _rational_roots(coefficients):
        element = ctx.rational(value)
        if element not in candidates:
            candidates.append(element)

    roots = []
    remaining = list(coefficients)
    for candidate in candidates:
        found = False
        while len(remaining) > 1 and not _evaluate(remaining, candidate):
            remaining = _deflate(remaining, candidate)
            found = True
        if found:
            roots.append(candidate)
    return roots, len(remaining) == 1


def _restricted_operator(space: Subspace, operator: Matrix) -> Matrix:
    """Matrix of operator on an invariant subspace, in the RREF basis coordinates."""
    columns = []
    for b in space.basis:
        image = operator.apply(b)
        columns.append(tuple(image[p] for p in space.pivots))
    return Matrix.from_rows(space.ctx, columns, space.dim).transpose()


def find_grouplikes(h: HopfAlgebraData, candidates: Sequence[Sequence] = ()) -> GroupLikeSet:
    """
    Search for all group-like elements with coordinates in the base field.

    A group-like g is a common eigenvector of the operators R_i with
    R_i[j][l] = Delta[l][j][i], with eigenvalue g_i. When H is cocommutative
    these operators commute, and splitting H into common eigenspaces finds
    every group-like whose eigenvalues are 0, a root of unity or rational.
    The result is complete when every characteristic polynomial met on the
    way factors completely over those roots. Otherwise the declared
    candidates and the group-like basis vectors are returned, closed under
    products, and flagged incomplete.

    Args:
        h: Host Hopf algebra
        candidates: Declared group-likes, always included

    Returns:
        GroupLikeSet
    """
    ctx = h.ctx
    d = h.dim
    found: List[Vector] = [tuple(c) for c in candidates]
    complete = False

    if is_cocommutative(h):
        complete = True
        operators = []
        for i in range(d):
            rows = [[h.comult[l][j][i] for l in range(d)] for j in range(d)]
            operators.append(Matrix.from_rows(ctx, rows, d))

        spaces: List[Tuple[Subspace, Tuple[CyclotomicElement, ...]]] = [(Subspace.full(ctx, d), ())]
        for operator in operators:
            refined = []
            for space, eigenvalues in spaces:
                restricted = _restricted_operator(space, operator)
                roots, split = _field_roots(charpoly(restricted))
                complete = complete and split
                for root in roots:
                    shifted = Matrix(ctx, restricted.rows, restricted.cols, tuple(
                        x - root if i == j else x
                        for i in range(restricted.rows) for j, x in
                        enumerate(restricted.row(i))
                    ))
                    local = kernel(shifted)
                    vectors = [_lift(space, coords) for coords in local.basis]
                    if vectors:
                        refined.append((Subspace.span(ctx, d, vectors), eigenvalues + (root,)))
            spaces = refined
        for _, eigenvalues in spaces:
            found.append(tuple(eigenvalues))
    else:
        logger.warning("Host is not cocommutative; group-like search limited to declared candidates")

    found.extend(unit_vector(ctx, d, i) for i in range(d))
    found.append(h.unit)
    grouplikes = [g for g in _unique(found) if is_grouplike(h, g)]
    grouplikes = _close(h, grouplikes)
    if not complete:
        logger.warning(f"Group-like search possibly incomplete: {len(grouplikes)} found")
    else:
        logger.info(f"Found {len(grouplikes)} group-like elements")
    return verify_grouplikes(h, grouplikes, complete)


def _lift(space: Subspace, coordinates: Sequence) -> Vector:
    result = [space.ctx.zero] * space.ambient
    for c, row in zip(coordinates, space.basis):
        if c:
            result = [x + c * r if r else x for x, r in zip(result, row)]
    return tuple(result)


def _unique(vectors: Sequence[Vector]) -> List[Vector]:
    seen: Dict[Vector, None] = {}
    for v in vectors:
        seen.setdefault(tuple(v), None)
    return list(seen)


def _close(h: HopfAlgebraData, elements: List[Vector]) -> List[Vector]:
    """Close a set of group-likes under products and the antipode."""
    result = list(elements)
    frontier = list(elements)
    while frontier:
        added = []
        for g in frontier:
            for k in list(result):
                for product in (h.multiply(g, k), h.multiply(k, g)):
                    if product not in result:
                        result.append(product)
                        added.append(product)
            inverse = h.apply_antipode(g)
            if inverse not in result:
                result.append(inverse)
                added.append(inverse)
        frontier = added
    return result
