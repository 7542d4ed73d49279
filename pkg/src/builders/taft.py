"""
Taft algebras T_n(q): g^n = 1, x^n = 0, xg = q gx, with g group-like and
x a (1, g)-skew primitive: Delta(x) = 1 (x) x + x (x) g.
"""

import logging
import random
from typing import List, Optional

from src.builders.example import HopfExample
from src.field.cyclotomic import CyclotomicElement, root_of_unity_order
from src.hopf.algebra import AlgebraData, matrix_algebra
from src.hopf.structure import HopfAlgebraData, validate
from src.hopf.tensor import pure_tensor, tensor_add, tensor_multiply
from src.image.representation import Representation, require_valid
from src.linalg.matrix import Matrix, matmul
from src.pointed.grouplikes import verify_grouplikes
from src.utils.error_handling import ClosureInvariantError, DimensionMismatch, WrongOrder


logger = logging.getLogger(__name__)


def _label(i: int, j: int) -> str:
    g = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
    x = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
    return (g + x) or "1"


def taft(n: int, q: CyclotomicElement) -> HopfExample:
    """
    The n^2-dimensional Taft algebra on the basis g^i x^j at index i * n + j.

    Delta(g) = g (x) g, Delta(x) = 1 (x) x + x (x) g; the coproduct of a
    basis word is the product of the generator coproducts.

    Raises:
        WrongOrder: when q is not a root of unity of order exactly n
    """
    if n < 2 or root_of_unity_order(q) != n:
        raise WrongOrder(f"Taft algebra T_{n} needs q of order {n}, got {q}")
    ctx = q.context

    def index(i, j):
        return (i % n) * n + j

    labels = [_label(i, j) for i in range(n) for j in range(n)]
    mult = []
    for i in range(n):
        for j in range(n):
            for a in range(n):
                for b in range(n):
                    if j + b < n:
                        mult.append((index(i, j), index(a, b), index(i + a, j + b), q ** (j * a)))
    unit = [1 if k == 0 else 0 for k in range(n * n)]
    algebra = AlgebraData.from_sparse(ctx, labels, mult, unit)
    pair = [algebra, algebra]

    g, x, one = algebra.basis_vector(index(1, 0)), algebra.basis_vector(index(0, 1)), algebra.unit
    delta_g = pure_tensor(g, g)
    delta_x = tensor_add(pure_tensor(one, x), pure_tensor(x, g))
    comult = []
    for i in range(n):
        for j in range(n):
            t = pure_tensor(one, one)
            for _ in range(i):
                t = tensor_multiply(pair, t, delta_g)
            for _ in range(j):
                t = tensor_multiply(pair, t, delta_x)
            comult.extend((index(i, j), a, b, c) for (a, b), c in t.items())
    counit = [1 if j == 0 else 0 for i in range(n) for j in range(n)]

    # S(g^i x^j) = S(x)^j S(g)^i with S(g) = g^-1 and S(x) = -x g^-1
    g_inverse = algebra.basis_vector(index(n - 1, 0))
    s_x = tuple(-c for c in algebra.multiply(x, g_inverse))
    antipode = []
    for i in range(n):
        for j in range(n):
            image = algebra.multiply(algebra.power(s_x, j), algebra.power(g_inverse, i))
            antipode.extend((k, index(i, j), c) for k, c in enumerate(image) if c)

    h = HopfAlgebraData.from_sparse(ctx, labels, mult, unit, comult, counit, antipode)
    report = validate(h, f"T_{n}({q})")
    if not report.ok:
        raise ClosureInvariantError(f"Taft algebra fails {[c.name for c in report.failures()]}")
    grouplikes = verify_grouplikes(h, [h.basis_vector(index(i, 0)) for i in range(n)])
    logger.info(f"Built Taft algebra T_{n} of dimension {n * n}")
    return HopfExample(h, grouplikes, parameters={"n": n, "q": q})


def _matrix_power(m: Matrix, k: int) -> Matrix:
    result = Matrix.identity(m.ctx, m.rows)
    for _ in range(k):
        result = matmul(result, m)
    return result


def taft_representation(example: HopfExample, g_image: Matrix, x_image: Matrix) -> Representation:
    """
    The representation of T_n(q) on matrices sending g, x to the given images.

    Raises:
        InvalidRepresentation: when the images break a defining relation
    """
    n = example.parameters["n"]
    m = g_image.rows
    if g_image.cols != m or x_image.rows != m or x_image.cols != m:
        raise DimensionMismatch("generator images must be square matrices of the same size")
    g_powers = [_matrix_power(g_image, i) for i in range(n)]
    x_powers = [_matrix_power(x_image, j) for j in range(n)]
    columns = [matmul(g_powers[i], x_powers[j]).entries for i in range(n) for j in range(n)]
    matrix = Matrix.from_rows(example.ctx, columns, m * m).transpose()
    r = Representation(example.hopf, matrix_algebra(example.ctx, m), matrix)
    require_valid(r)
    return r


def random_taft_representation(example: HopfExample, rng: random.Random,
                               size: Optional[int] = None) -> Representation:
    """
    A random representation from a diagonal g = diag(q^s_i) and a strictly
    upper triangular x whose entry (a, b) may be nonzero only when
    q^s_b = q * q^s_a.
    """
    n = example.parameters["n"]
    q = example.parameters["q"]
    ctx = example.ctx
    size = size or rng.randint(1, n)
    if size > n:
        raise DimensionMismatch(f"matrices larger than {n} need not satisfy x^{n} = 0")
    exponents: List[int] = [rng.randrange(n) for _ in range(size)]
    g_rows = [[q ** exponents[a] if a == b else 0 for b in range(size)] for a in range(size)]
    x_rows = []
    for a in range(size):
        row = []
        for b in range(size):
            allowed = b > a and (exponents[b] - exponents[a]) % n == 1
            row.append(rng.randint(-2, 2) if allowed else 0)
        x_rows.append(row)
    logger.debug(f"Random Taft representation of size {size} with exponents {exponents}")
    return taft_representation(example, Matrix.from_rows(ctx, g_rows, size),
                               Matrix.from_rows(ctx, x_rows, size))
