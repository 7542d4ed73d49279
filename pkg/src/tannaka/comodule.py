"""
Finite-dimensional right comodules given by coefficient matrices.

A comodule of dimension n over H is a matrix u of elements of H with
coaction alpha(e_i) = sum_j e_j (x) u[j][i]; it is valid when
Delta(u_ij) = sum_k u_ik (x) u_kj and epsilon(u_ij) = delta_ij.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from src.hopf.report import ValidationReport
from src.hopf.structure import HopfAlgebraData, HopfMorphism
from src.hopf.tensor import pure_tensor, tensor_add
from src.linalg.matrix import Vector
from src.linalg.subspace import EchelonBasis
from src.pointed.grouplikes import is_grouplike
from src.utils.error_handling import DimensionMismatch, HostMismatch, NotGroupLike


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Comodule:
    """
    Coefficient matrix of a comodule; coefficients[i][j] = u_ij in H.

    self_dual marks comodules isomorphic to their dual, for which the
    word alphabet of the fixed-point criterion collapses to {a}.
    """
    host: HopfAlgebraData
    dim: int
    coefficients: Tuple[Tuple[Vector, ...], ...]
    name: str = "U"
    self_dual: bool = False

    def __post_init__(self):
        if len(self.coefficients) != self.dim or any(len(row) != self.dim for row in self.coefficients):
            raise DimensionMismatch(f"coefficient matrix is not {self.dim}x{self.dim}")
        for row in self.coefficients:
            for u in row:
                if len(u) != self.host.dim:
                    raise DimensionMismatch(f"coefficient of length {len(u)} in a Hopf algebra of dimension {self.host.dim}")

    def coefficient(self, i: int, j: int) -> Vector:
        return self.coefficients[i][j]


def make_comodule(host: HopfAlgebraData, coefficients: Sequence[Sequence[Sequence]],
                  name: str = "U", self_dual: bool = False) -> Comodule:
    ctx = host.ctx
    frozen = tuple(tuple(tuple(ctx.coerce(x) for x in u) for u in row) for row in coefficients)
    return Comodule(host, len(frozen), frozen, name, self_dual)


def validate_comodule(u: Comodule, subject: str = None) -> ValidationReport:
    """Coassociativity and counit identities on every coefficient."""
    report = ValidationReport(subject or f"comodule {u.name}")
    h = u.host
    n = u.dim
    coassociative = None
    counital = None
    for i in range(n):
        for j in range(n):
            expected = {}
            for k in range(n):
                expected = tensor_add(expected, pure_tensor(u.coefficients[i][k], u.coefficients[k][j]))
            if coassociative is None and h.comultiply(u.coefficients[i][j]) != expected:
                coassociative = (i, j)
            if counital is None and h.apply_counit(u.coefficients[i][j]) != (1 if i == j else 0):
                counital = (i, j)
    report.record("coassociativity", coassociative)
    report.record("counit", counital)
    return report


def trivial_comodule(h: HopfAlgebraData) -> Comodule:
    """k with coaction 1 -> 1 (x) 1."""
    return Comodule(h, 1, ((h.unit,),), "1", True)


def character_comodule(h: HopfAlgebraData, g: Sequence, name: str = "g") -> Comodule:
    """The one-dimensional comodule with coefficient a group-like g."""
    g = tuple(h.ctx.coerce(x) for x in g)
    if not is_grouplike(h, g):
        raise NotGroupLike(f"coefficient of {name} is not group-like")
    return Comodule(h, 1, ((g,),), name)


def regular_comodule(h: HopfAlgebraData) -> Comodule:
    """H itself with coaction Delta: u_ji = sum_k Delta[i][j][k] e_k."""
    d = h.dim
    coefficients = tuple(
        tuple(tuple(h.comult[i][j][k] for k in range(d)) for i in range(d))
        for j in range(d)
    )
    return Comodule(h, d, coefficients, "H")


def tensor_comodule(u: Comodule, v: Comodule) -> Comodule:
    """U (x) V with basis index i * dim(V) + a and coefficients u_ij v_ab."""
    if u.host != v.host:
        raise HostMismatch("tensor product of comodules over different Hopf algebras")
    h = u.host
    rows = []
    for i in range(u.dim):
        for a in range(v.dim):
            rows.append(tuple(
                h.multiply(u.coefficients[i][j], v.coefficients[a][b])
                for j in range(u.dim) for b in range(v.dim)
            ))
    return Comodule(h, u.dim * v.dim, tuple(rows), f"{u.name}{v.name}",
                    u.self_dual and v.self_dual)


def dual_comodule(u: Comodule) -> Comodule:
    """U* with coefficients S(u_ji)."""
    h = u.host
    coefficients = tuple(
        tuple(h.apply_antipode(u.coefficients[j][i]) for j in range(u.dim))
        for i in range(u.dim)
    )
    return Comodule(h, u.dim, coefficients, f"{u.name}*", u.self_dual)


def push_comodule(u: Comodule, p: HopfMorphism) -> Comodule:
    """The comodule over L obtained by applying a Hopf map p: H -> L to the coefficients."""
    if p.source != u.host:
        raise HostMismatch("push-forward along a map from another Hopf algebra")
    coefficients = tuple(tuple(p.apply(x) for x in row) for row in u.coefficients)
    return Comodule(p.target, u.dim, coefficients, u.name, u.self_dual)


def word_comodule(u: Comodule, word: str, dual: Comodule = None) -> Comodule:
    """
    U^x for a word x over {a, b}: a stands for U, b for U*, the empty word for k.
    """
    result = trivial_comodule(u.host)
    if not word:
        return result
    dual = dual or dual_comodule(u)
    for position, letter in enumerate(word):
        if letter not in "ab":
            raise ValueError(f"letter {letter!r} at position {position} is not a or b")
        factor = u if letter == "a" else dual
        result = factor if position == 0 else tensor_comodule(result, factor)
    return result


def is_faithful_comodule(u: Comodule) -> bool:
    """True when the u_ij and S(u_ij) generate H as an algebra."""
    h = u.host
    generators = []
    for row in u.coefficients:
        for x in row:
            generators.append(x)
            generators.append(h.apply_antipode(x))
    span = EchelonBasis(h.ctx, h.dim)
    span.add(h.unit)
    frontier = [h.unit]
    while frontier:
        added = []
        for x in frontier:
            for g in generators:
                product = h.multiply(x, g)
                if span.add(product):
                    added.append(product)
        frontier = added
    logger.debug(f"Coefficients of {u.name} generate a subalgebra of dimension {span.dim}")
    return span.dim == h.dim
