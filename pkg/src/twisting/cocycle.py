"""
2-cocycles (cotwists) and the Hopf algebras and algebras they deform.

A cocycle is a bilinear form sigma on H stored as a matrix with
sigma.get(i, j) = sigma(e_i, e_j).
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

from src.hopf.algebra import AlgebraData, validate_algebra
from src.hopf.structure import HopfAlgebraData, HopfMorphism, validate
from src.hopf.tensor import iterated_comult
from src.linalg.matrix import Matrix, Vector, inverse, matmul, solve
from src.pointed.grouplikes import GroupLikeSet
from src.utils.error_handling import (
    ClosureInvariantError, DimensionMismatch, HostMismatch, NotACocycle, NotSurjective,
    SingularSystem
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cocycle:
    """sigma and its convolution inverse on H (x) H."""
    host: HopfAlgebraData
    sigma: Matrix
    sigma_inv: Matrix

    def __post_init__(self):
        d = self.host.dim
        for name, m in (("sigma", self.sigma), ("sigma_inv", self.sigma_inv)):
            if m.rows != d or m.cols != d:
                raise DimensionMismatch(f"{name} is {m.rows}x{m.cols}, expected {d}x{d}")

    def evaluate(self, x: Sequence, y: Sequence) -> object:
        return _form(self.sigma, x, y)


def _form(m: Matrix, x: Sequence, y: Sequence):
    """x^T m y."""
    total = m.ctx.zero
    for i, a in enumerate(x):
        if a:
            row = m.row(i)
            for j, b in enumerate(y):
                if b and row[j]:
                    total = total + a * row[j] * b
    return total


def _convolution_matrix(h: HopfAlgebraData, sigma: Matrix) -> Matrix:
    """
    Matrix of tau -> sigma * tau on forms H (x) H -> k.

    Row (i, l), column (k, n): sum over Delta(e_i) = e_j (x) e_k and
    Delta(e_l) = e_m (x) e_n of sigma(e_j, e_m).
    """
    ctx = h.ctx
    d = h.dim
    rows = [[ctx.zero] * (d * d) for _ in range(d * d)]
    for i in range(d):
        for l in range(d):
            row = rows[i * d + l]
            for j, k, a in h.comult_terms[i]:
                for m, n, b in h.comult_terms[l]:
                    s = sigma.get(j, m)
                    if s:
                        row[k * d + n] = row[k * d + n] + a * b * s
    return Matrix.from_rows(ctx, rows, d * d)


def _counit_form(h: HopfAlgebraData) -> Vector:
    return tuple(x * y for x in h.counit for y in h.counit)


def convolution_inverse(h: HopfAlgebraData, sigma: Matrix) -> Matrix:
    """
    The form tau with sigma * tau = epsilon (x) epsilon.

    Raises:
        NotACocycle: when sigma is not convolution invertible
    """
    try:
        dense = solve(_convolution_matrix(h, sigma), _counit_form(h))
    except SingularSystem:
        raise NotACocycle("sigma is not convolution invertible")
    d = h.dim
    return Matrix.from_rows(h.ctx, [dense[i * d:(i + 1) * d] for i in range(d)], d)


def make_cocycle(h: HopfAlgebraData, sigma: Union[Matrix, Sequence[Sequence]],
                 sigma_inv: Optional[Union[Matrix, Sequence[Sequence]]] = None) -> Cocycle:
    if not isinstance(sigma, Matrix):
        sigma = Matrix.from_rows(h.ctx, sigma, h.dim)
    if sigma_inv is None:
        sigma_inv = convolution_inverse(h, sigma)
    elif not isinstance(sigma_inv, Matrix):
        sigma_inv = Matrix.from_rows(h.ctx, sigma_inv, h.dim)
    return Cocycle(h, sigma, sigma_inv)


def trivial_cocycle(h: HopfAlgebraData) -> Cocycle:
    """sigma = epsilon (x) epsilon, its own inverse."""
    rows = [[x * y for y in h.counit] for x in h.counit]
    m = Matrix.from_rows(h.ctx, rows, h.dim)
    return Cocycle(h, m, m)


@dataclass(frozen=True)
class CocycleVerdict:
    holds: bool
    failed: Optional[str] = None
    witness: Optional[Tuple[str, ...]] = None

    def __bool__(self):
        return self.holds


def _left_twisted_products(c: Cocycle) -> List[List[Vector]]:
    """T[i][j] = sigma(x_1, y_1) x_2 y_2 for x = e_i, y = e_j."""
    h = c.host
    d = h.dim
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            value = [h.ctx.zero] * d
            for a, b, x in h.comult_terms[i]:
                for p, q, y in h.comult_terms[j]:
                    s = c.sigma.get(a, p)
                    if s:
                        coefficient = x * y * s
                        for k, m in h.mult_terms.get((b, q), ()):
                            value[k] = value[k] + coefficient * m
            row.append(tuple(value))
        table.append(row)
    return table


def check_cocycle(c: Cocycle) -> CocycleVerdict:
    """
    Check normalization, the 2-cocycle identity and the inverse identities.

    The cocycle identity is sigma(x_1, y_1) sigma(x_2 y_2, z) =
    sigma(y_1, z_1) sigma(x, y_2 z_2) on all basis triples, i.e.
    sigma(T(x, y), z) = sigma(x, T(y, z)) with T(x, y) = sigma(x_1, y_1) x_2 y_2.
    Witnesses are basis labels, "1" standing for the unit.
    """
    h = c.host
    d = h.dim
    labels = h.labels
    for i in range(d):
        e = h.basis_vector(i)
        if _form(c.sigma, e, h.unit) != h.counit[i]:
            return CocycleVerdict(False, "normalization sigma(x, 1) = epsilon(x)", (labels[i], "1"))
        if _form(c.sigma, h.unit, e) != h.counit[i]:
            return CocycleVerdict(False, "normalization sigma(1, x) = epsilon(x)", ("1", labels[i]))

    twisted = _left_twisted_products(c)
    for i in range(d):
        for j in range(d):
            for l in range(d):
                left = _form(c.sigma, twisted[i][j], h.basis_vector(l))
                right = _form(c.sigma, h.basis_vector(i), twisted[j][l])
                if left != right:
                    return CocycleVerdict(False, "cocycle identity", (labels[i], labels[j], labels[l]))

    counit_form = _counit_form(h)
    inv_dense = c.sigma_inv.entries
    sigma_dense = c.sigma.entries
    if _convolution_matrix(h, c.sigma).apply(inv_dense) != counit_form:
        return CocycleVerdict(False, "sigma * sigma^-1 = epsilon (x) epsilon")
    if _convolution_matrix(h, c.sigma_inv).apply(sigma_dense) != counit_form:
        return CocycleVerdict(False, "sigma^-1 * sigma = epsilon (x) epsilon")
    return CocycleVerdict(True)


def _require_cocycle(c: Cocycle):
    verdict = check_cocycle(c)
    if not verdict:
        raise NotACocycle(f"{verdict.failed} fails at {verdict.witness}")


def cotwist_hopf(c: Cocycle) -> HopfAlgebraData:
    """
    H^sigma: [x][y] = sigma(x_1, y_1) sigma^-1(x_3, y_3) [x_2 y_2] and
    S^sigma(x) = sigma(x_1, S(x_2)) sigma^-1(S(x_4), x_5) S(x_3).

    Raises:
        NotACocycle: when check_cocycle fails
    """
    _require_cocycle(c)
    h = c.host
    ctx = h.ctx
    d = h.dim
    triple = [iterated_comult(h, h.basis_vector(i), 3) for i in range(d)]
    mult = []
    for i in range(d):
        for j in range(d):
            value = [ctx.zero] * d
            for (a, b, x3), x in triple[i].items():
                for (p, q, y3), y in triple[j].items():
                    s = c.sigma.get(a, p)
                    if not s:
                        continue
                    t = c.sigma_inv.get(x3, y3)
                    if not t:
                        continue
                    coefficient = x * y * s * t
                    for k, m in h.mult_terms.get((b, q), ()):
                        value[k] = value[k] + coefficient * m
            mult.extend((i, j, k, v) for k, v in enumerate(value) if v)

    # sigma(e_a, S(e_b)) and sigma^-1(S(e_a), e_b)
    sigma_s = matmul(c.sigma, h.antipode)
    s_sigma_inv = matmul(h.antipode.transpose(), c.sigma_inv)
    antipode = []
    for i in range(d):
        value = [ctx.zero] * d
        for (a, b, m, p, q), x in iterated_comult(h, h.basis_vector(i), 5).items():
            left = sigma_s.get(a, b)
            if not left:
                continue
            right = s_sigma_inv.get(p, q)
            if not right:
                continue
            coefficient = x * left * right
            for k, s in enumerate(h.antipode.column(m)):
                if s:
                    value[k] = value[k] + coefficient * s
        antipode.extend((k, i, v) for k, v in enumerate(value) if v)

    comult = [(i, j, k, v) for i in range(d) for j, k, v in h.comult_terms[i]]
    result = HopfAlgebraData.from_sparse(ctx, h.labels, mult, h.unit, comult, h.counit, antipode)
    report = validate(result, "cotwisted hopf algebra")
    if not report.ok:
        raise ClosureInvariantError(f"H^sigma fails {[f.name for f in report.failures()]}")
    return result


def one_sided_twisted_algebras(c: Cocycle) -> Tuple[AlgebraData, AlgebraData]:
    """
    The algebras {x}{y} = sigma(x_1, y_1) {x_2 y_2} and
    <x><y> = sigma^-1(x_2, y_2) <x_1 y_1>.

    Raises:
        NotACocycle: when check_cocycle fails
    """
    _require_cocycle(c)
    h = c.host
    d = h.dim
    left = []
    for i, row in enumerate(_left_twisted_products(c)):
        for j, value in enumerate(row):
            left.extend((i, j, k, v) for k, v in enumerate(value) if v)
    right = []
    for i in range(d):
        for j in range(d):
            value = [h.ctx.zero] * d
            for a, b, x in h.comult_terms[i]:
                for p, q, y in h.comult_terms[j]:
                    t = c.sigma_inv.get(b, q)
                    if t:
                        for k, m in h.mult_terms.get((a, p), ()):
                            value[k] = value[k] + x * y * t * m
            right.extend((i, j, k, v) for k, v in enumerate(value) if v)

    algebras = (
        AlgebraData.from_sparse(h.ctx, h.labels, left, h.unit),
        AlgebraData.from_sparse(h.ctx, h.labels, right, h.unit),
    )
    for name, algebra in zip(("sigma H", "H sigma^-1"), algebras):
        report = validate_algebra(algebra, name)
        if not report.ok:
            raise ClosureInvariantError(f"{name} fails {[f.name for f in report.failures()]}")
    return algebras


def bicharacter_cocycle(h: HopfAlgebraData, grouplikes: GroupLikeSet,
                        beta: Union[Callable[[int, int], object], Sequence[Sequence]]) -> Cocycle:
    """
    sigma(g_a, g_b) = beta(a, b) on a Hopf algebra spanned by its group-likes.

    beta is indexed by positions in grouplikes; on group-likes the
    convolution inverse is the pointwise inverse.

    Raises:
        DimensionMismatch: when the group-likes do not form a basis
    """
    ctx = h.ctx
    n = len(grouplikes)
    if n != h.dim:
        raise DimensionMismatch(f"{n} group-likes cannot span a Hopf algebra of dimension {h.dim}")
    lookup = beta if callable(beta) else (lambda a, b: beta[a][b])
    values = [[ctx.coerce(lookup(a, b)) for b in range(n)] for a in range(n)]
    change = Matrix.from_rows(ctx, list(grouplikes.elements), h.dim).transpose()
    try:
        coordinates = inverse(change)
    except SingularSystem:
        raise DimensionMismatch("group-likes are linearly dependent")
    to_basis = coordinates.transpose()

    def pulled(table):
        return matmul(matmul(to_basis, Matrix.from_rows(ctx, table, n)), coordinates)

    inverse_values = [[x.inverse() for x in row] for row in values]
    return Cocycle(h, pulled(values), pulled(inverse_values))


def klein_bicharacter(grouplikes: GroupLikeSet, a: int, b: int) -> List[List[int]]:
    """
    beta(a^i b^j, a^k b^l) = (-1)^(j k) on a Klein four-group of group-likes.

    Raises:
        NotACocycle: when a and b do not generate a Klein four-group
    """
    table = grouplikes.table
    identity = grouplikes.identity
    words = {}
    for i in range(2):
        for j in range(2):
            element = identity
            if i:
                element = table[element][a]
            if j:
                element = table[element][b]
            words[element] = (i, j)
    if len(words) != 4 or len(grouplikes) != 4 or table[a][a] != identity or table[b][b] != identity:
        raise NotACocycle("group-likes do not form a Klein four-group generated by a and b")
    return [[(-1) ** (words[x][1] * words[y][0]) for y in range(4)] for x in range(4)]


def induced_cocycle(c: Cocycle, p: HopfMorphism) -> Cocycle:
    """
    sigma_p = sigma o (p (x) p) on the source of a surjective Hopf map.

    Raises:
        HostMismatch: when p does not land in the host of sigma
        NotSurjective: when p is not onto
    """
    if p.target != c.host:
        raise HostMismatch("p does not map onto the host of sigma")
    if not p.is_surjective():
        raise NotSurjective(f"p has rank {p.rank()}, expected {p.target.dim}")
    pt = p.matrix.transpose()
    sigma = matmul(matmul(pt, c.sigma), p.matrix)
    sigma_inv = matmul(matmul(pt, c.sigma_inv), p.matrix)
    logger.info(f"Induced cocycle on dimension {p.source.dim} from dimension {p.target.dim}")
    return Cocycle(p.source, sigma, sigma_inv)
