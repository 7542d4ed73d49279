"""
The finite quotients A(k, e) of the hyperoctahedral Hopf algebra on the
generators v11, v12, v21, v22.

The algebra splits along two central idempotents into a diagonal
component, where v11 and v22 act as the reflections s and u of a dihedral
group, and an antidiagonal component, where v12 and v21 do. In each
component the defining relation reads w_s(k) = c w_u(k), that is r^k = c
for the rotation r = su, with c = 1 on the diagonal and c = e on the
antidiagonal. So each component is a twisted group algebra of the
dihedral group of order 2k and

    dim A(k, e) = 4k.

Basis elements are alternating words in s and u: the empty word, the
words of lengths 1..k-1 starting with either letter, and w_s(k).
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from config import DEFAULT_CONDUCTOR
from src.builders.example import HopfExample
from src.field.cyclotomic import CyclotomicContext, CyclotomicElement, context_for
from src.hopf.algebra import AlgebraData, matrix_algebra
from src.hopf.structure import HopfAlgebraData, validate
from src.hopf.tensor import TensorElement, pure_tensor, tensor_add, tensor_multiply
from src.image.representation import Representation, validate_rep
from src.linalg.matrix import Matrix, Vector, matmul, vec_add, vec_scale, vec_sub
from src.pointed.grouplikes import verify_grouplikes
from src.tannaka.comodule import Comodule, validate_comodule
from src.utils.error_handling import ClosureInvariantError, OrderMismatch


logger = logging.getLogger(__name__)

DIAGONAL = 0
ANTIDIAGONAL = 1

# (component, letter) -> generator v_ij as (i, j)
GENERATORS = {
    (DIAGONAL, "s"): (0, 0),
    (DIAGONAL, "u"): (1, 1),
    (ANTIDIAGONAL, "s"): (0, 1),
    (ANTIDIAGONAL, "u"): (1, 0),
}


@dataclass(frozen=True)
class AlternatingWord:
    """An alternating word in s and u inside one component; start is "" for the empty word."""
    component: int
    start: str
    length: int

    def letters(self) -> str:
        # the empty word is the component idempotent v11^2 or v12^2
        if not self.length:
            return "ss"
        other = "u" if self.start == "s" else "s"
        return "".join(self.start if i % 2 == 0 else other for i in range(self.length))

    def dihedral(self) -> Tuple[int, int]:
        """The word as r^a s^f before reduction modulo r^k = c."""
        j, odd = divmod(self.length, 2)
        if self.start == "u":
            return -(j + odd), odd
        return j, odd

    @property
    def label(self) -> str:
        if not self.length:
            return "v11^2" if self.component == DIAGONAL else "v12^2"
        names = {letter: f"v{i + 1}{j + 1}" for (c, letter), (i, j) in GENERATORS.items()
                 if c == self.component}
        return "".join(names[letter] for letter in self.letters())


def alternating_basis(k: int) -> List[AlternatingWord]:
    """2k words per component, diagonal component first."""
    words = []
    for component in (DIAGONAL, ANTIDIAGONAL):
        words.append(AlternatingWord(component, "", 0))
        for length in range(1, k):
            words.append(AlternatingWord(component, "s", length))
            words.append(AlternatingWord(component, "u", length))
        words.append(AlternatingWord(component, "s", k))
    return words


class _DihedralModel:
    """Normal forms of r^a s^f in each component, as signed basis words."""

    def __init__(self, k: int, e: int):
        self.k = k
        self.signs = {DIAGONAL: 1, ANTIDIAGONAL: e}
        self.words = alternating_basis(k)
        self.reduced: List[Tuple[int, int, int]] = []
        self.lookup: Dict[Tuple[int, int, int], Tuple[int, int]] = {}
        for index, word in enumerate(self.words):
            a, f = word.dihedral()
            rem, f, sign = self.reduce(word.component, a, f)
            self.reduced.append((rem, f, sign))
            key = (word.component, rem, f)
            if key in self.lookup:
                raise ClosureInvariantError(f"words {self.words[self.lookup[key][0]].label} and "
                                            f"{word.label} have the same normal form")
            # word = sign * r^rem s^f, so r^rem s^f = sign * word
            self.lookup[key] = (index, sign)
        if len(self.lookup) != 4 * k:
            raise ClosureInvariantError(f"A({k}, {e}) word model has {len(self.lookup)} normal forms")

    def reduce(self, component: int, a: int, f: int) -> Tuple[int, int, int]:
        q, rem = divmod(a, self.k)
        return rem, f % 2, self.signs[component] ** abs(q)

    def element(self, component: int, a: int, f: int) -> Tuple[int, int]:
        """r^a s^f in a component as (basis index, sign)."""
        rem, f, sign = self.reduce(component, a, f)
        index, word_sign = self.lookup[(component, rem, f)]
        return index, sign * word_sign

    def product(self, x: int, y: int) -> Tuple[int, int]:
        a, f, sx = self.reduced[x]
        b, g, sy = self.reduced[y]
        index, sign = self.element(self.words[x].component, a + (b if f == 0 else -b), f + g)
        return index, sx * sy * sign


def _generator_vectors(model: _DihedralModel, algebra: AlgebraData) -> List[List[Vector]]:
    """v[i][j] for the four generators."""
    v = [[None, None], [None, None]]
    for (component, letter), (i, j) in GENERATORS.items():
        a, f = (0, 1) if letter == "s" else (-1, 1)
        index, sign = model.element(component, a, f)
        v[i][j] = vec_scale(sign, algebra.basis_vector(index))
    return v


def _word_factors(word: AlternatingWord) -> List[Tuple[int, int]]:
    return [GENERATORS[(word.component, letter)] for letter in word.letters()]


def ake(k: int, e: int, ctx: CyclotomicContext = None) -> HopfExample:
    """
    Build A(k, e) with its group-likes and two-dimensional comodules.

    Args:
        k: Relation length, k >= 1
        e: Sign of the antidiagonal relation, +1 or -1
        ctx: Base field; the default conductor covers e = -1

    Returns:
        HopfExample with group-likes [1, d, g, h] and comodules C(1)..C(k-1)
    """
    if k < 1 or e not in (1, -1):
        raise ValueError(f"A(k, e) needs k >= 1 and e = +1 or -1, got k={k}, e={e}")
    ctx = ctx or context_for(DEFAULT_CONDUCTOR)
    model = _DihedralModel(k, e)
    words = model.words
    d = len(words)
    labels = [w.label for w in words]

    mult = []
    for x in range(d):
        for y in range(d):
            if words[x].component == words[y].component:
                index, sign = model.product(x, y)
                mult.append((x, y, index, sign))
    unit = [1 if not w.length else 0 for w in words]
    algebra = AlgebraData.from_sparse(ctx, labels, mult, unit)
    pair = [algebra, algebra]

    v = _generator_vectors(model, algebra)
    delta_v = [[None, None], [None, None]]
    for i in range(2):
        for j in range(2):
            t: TensorElement = {}
            for m in range(2):
                t = tensor_add(t, pure_tensor(v[i][m], v[m][j]))
            delta_v[i][j] = t

    comult = []
    antipode = []
    for x, word in enumerate(words):
        factors = _word_factors(word)
        t = pure_tensor(algebra.unit, algebra.unit)
        for i, j in factors:
            t = tensor_multiply(pair, t, delta_v[i][j])
        comult.extend((x, a, b, c) for (a, b), c in t.items())
        # S(v_ij) = v_ji, antimultiplicative
        image = algebra.product(v[j][i] for i, j in reversed(factors))
        antipode.extend((row, x, c) for row, c in enumerate(image) if c)
    counit = [1 if w.component == DIAGONAL else 0 for w in words]

    h = HopfAlgebraData.from_sparse(ctx, labels, mult, unit, comult, counit, antipode)
    report = validate(h, f"A({k}, {e:+d})")
    if not report.ok:
        raise ClosureInvariantError(f"A({k}, {e:+d}) fails {[c.name for c in report.failures()]}")
    if h.dim != 4 * k:
        raise ClosureInvariantError(f"A({k}, {e:+d}) has dimension {h.dim}, expected {4 * k}")

    grouplikes, complete = _grouplikes(h, words, e)
    comodules = tuple(_two_dim_comodule(h, words, j) for j in range(1, k))
    logger.info(f"Built A({k}, {e:+d}) of dimension {h.dim} with {len(grouplikes)} group-likes "
                f"and {len(comodules)} two-dimensional comodules")
    notes = ()
    if not complete:
        notes = (f"g and h need a square root of {e} outside Q(zeta_{ctx.conductor})",)
    return HopfExample(h, grouplikes, comodules, parameters={"k": k, "e": e}, notes=notes)


def _position(words: Sequence[AlternatingWord], component: int, start: str, length: int) -> int:
    return words.index(AlternatingWord(component, start, length))


def _grouplikes(h: HopfAlgebraData, words: Sequence[AlternatingWord], e: int):
    """
    1, d = P+ - P-, and D +- lambda A with D, A the words w_s(k) in the two
    components and lambda^2 = e.

    Delta(D) = D (x) D + e A (x) A and Delta(A) = D (x) A + A (x) D, so
    D + lambda A is group-like exactly when lambda^2 = e.
    """
    ctx = h.ctx
    k = len(words) // 4
    p_plus = h.basis_vector(_position(words, DIAGONAL, "", 0))
    p_minus = h.basis_vector(_position(words, ANTIDIAGONAL, "", 0))
    candidates = [h.unit, vec_sub(p_plus, p_minus)]
    complete = True
    if e == 1:
        lam = ctx.one
    elif ctx.conductor % 4 == 0:
        lam = ctx.root(4)
    else:
        lam = None
        complete = False
        logger.warning(f"Q(zeta_{ctx.conductor}) has no square root of -1; "
                       f"g and h of A({k}, -1) are missing")
    if lam is not None:
        big_d = h.basis_vector(_position(words, DIAGONAL, "s", k))
        big_a = h.basis_vector(_position(words, ANTIDIAGONAL, "s", k))
        candidates.append(vec_add(big_d, vec_scale(lam, big_a)))
        candidates.append(vec_sub(big_d, vec_scale(lam, big_a)))
    grouplikes = verify_grouplikes(h, candidates, complete=complete)
    if lam is not None and len(grouplikes) != len(candidates):
        raise ClosureInvariantError(f"only {len(grouplikes)} of {len(candidates)} group-like formulas hold")
    return grouplikes, complete


def _two_dim_comodule(h: HopfAlgebraData, words: Sequence[AlternatingWord], j: int) -> Comodule:
    """C(j): u11 = w_s(j), u22 = w_u(j) diagonal; u12 = w_s(j), u21 = w_u(j) antidiagonal."""
    def word(component, start):
        return h.basis_vector(_position(words, component, start, j))

    coefficients = (
        (word(DIAGONAL, "s"), word(ANTIDIAGONAL, "s")),
        (word(ANTIDIAGONAL, "u"), word(DIAGONAL, "u")),
    )
    comodule = Comodule(h, 2, coefficients, f"C({j})", self_dual=True)
    report = validate_comodule(comodule)
    if not report.ok:
        raise ClosureInvariantError(f"C({j}) fails {[c.name for c in report.failures()]}")
    return comodule


def ake_representation(example: HopfExample, x12: Matrix, x21: Matrix) -> Representation:
    """
    The representation with v11, v22 -> 0, v12 -> x12 and v21 -> x21.

    Raises:
        OrderMismatch: when the images violate a relation of A(k, e)
    """
    h = example.hopf
    ctx = h.ctx
    m = x12.rows
    k = example.parameters["k"]
    words = alternating_basis(k)
    letter_images = {
        (ANTIDIAGONAL, "s"): x12,
        (ANTIDIAGONAL, "u"): x21,
    }
    columns = []
    for word in words:
        if word.component == DIAGONAL:
            columns.append((ctx.zero,) * (m * m))
            continue
        image = Matrix.identity(ctx, m)
        for letter in word.letters():
            image = matmul(image, letter_images[(word.component, letter)])
        columns.append(image.entries)
    matrix = Matrix.from_rows(ctx, columns, m * m).transpose()
    r = Representation(h, matrix_algebra(ctx, m), matrix)
    report = validate_rep(r, f"representation of A({k}, {example.parameters['e']:+d})")
    if not report.ok:
        failed = ", ".join(f"{c.name} at {c.witness}" for c in report.failures())
        raise OrderMismatch(f"generator images do not satisfy the relations: {failed}")
    return r


def pi_q(example: HopfExample, q: CyclotomicElement) -> Representation:
    """v12 -> [[0, q^-1], [q, 0]], v21 -> [[0, 1], [1, 0]]."""
    ctx = example.ctx
    x12 = Matrix.from_rows(ctx, [[0, q.inverse()], [q, 0]])
    x21 = Matrix.from_rows(ctx, [[0, 1], [1, 0]])
    return ake_representation(example, x12, x21)


def degraded_pi(example: HopfExample) -> Representation:
    """Both off-diagonal generators sent to the flip; only defined for e = +1."""
    flip = Matrix.from_rows(example.ctx, [[0, 1], [1, 0]])
    return ake_representation(example, flip, flip)
