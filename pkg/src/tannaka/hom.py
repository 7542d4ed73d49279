"""
Comodule morphism spaces Hom_H(U, V) and pi-morphism spaces Hom(U_pi, V_pi).

A morphism f: U -> V is an n_V x n_U matrix T, stored as a vector with
T[l][i] at index l * n_U + i. Both spaces solve

    sum_l T[l][i] v_ml = sum_j T[m][j] u_ji    for all m, i

with the coefficients taken in H, or in A after applying pi.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Sequence

from src.hopf.structure import HopfMorphism
from src.image.representation import Representation
from src.linalg.matrix import Matrix, Vector
from src.linalg.subspace import Subspace, kernel
from src.tannaka.comodule import Comodule, push_comodule
from src.utils.error_handling import HostMismatch


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomSpace:
    """Intertwiners U -> V over the named Hopf algebra (or over pi)."""
    source: Comodule
    target: Comodule
    space: Subspace
    over: str = "H"

    @property
    def dim(self) -> int:
        return self.space.dim

    def matrices(self) -> List[Matrix]:
        n_u = self.source.dim
        return [Matrix.from_rows(self.space.ctx, [v[l * n_u:(l + 1) * n_u] for l in range(self.target.dim)], n_u)
                for v in self.space.basis]


def _intertwiners(u: Comodule, v: Comodule, image: Callable[[Vector], Vector], width: int) -> Subspace:
    ctx = u.host.ctx
    n_u, n_v = u.dim, v.dim
    unknowns = n_u * n_v
    u_images = [[image(x) for x in row] for row in u.coefficients]
    v_images = [[image(x) for x in row] for row in v.coefficients]
    rows = []
    for m in range(n_v):
        for i in range(n_u):
            for c in range(width):
                row = [ctx.zero] * unknowns
                for l in range(n_v):
                    x = v_images[m][l][c]
                    if x:
                        row[l * n_u + i] = row[l * n_u + i] + x
                for j in range(n_u):
                    x = u_images[j][i][c]
                    if x:
                        row[m * n_u + j] = row[m * n_u + j] - x
                if any(row):
                    rows.append(row)
    if not rows:
        return Subspace.full(ctx, unknowns)
    return kernel(Matrix.from_rows(ctx, rows, unknowns))


def hom_comodule(u: Comodule, v: Comodule, over: str = "H") -> HomSpace:
    """
    Hom_H(U, V).

    Raises:
        HostMismatch: when U and V are comodules over different Hopf algebras
    """
    if u.host != v.host:
        raise HostMismatch("comodules over different Hopf algebras")
    space = _intertwiners(u, v, lambda x: x, u.host.dim)
    logger.debug(f"dim Hom_{over}({u.name}, {v.name}) = {space.dim}")
    return HomSpace(u, v, space, over)


def hom_pi(r: Representation, u: Comodule, v: Comodule) -> HomSpace:
    """
    Hom(U_pi, V_pi): intertwiners after applying pi to the coefficients.

    Raises:
        HostMismatch: when U, V and pi do not share the Hopf algebra
    """
    if u.host != v.host or u.host != r.source:
        raise HostMismatch("pi and the comodules live on different Hopf algebras")
    space = _intertwiners(u, v, r.apply, r.target.dim)
    logger.debug(f"dim Hom({u.name}_pi, {v.name}_pi) = {space.dim}")
    return HomSpace(u, v, space, "pi")


def hom_pushed(u: Comodule, v: Comodule, p: HopfMorphism, over: str) -> HomSpace:
    """Hom over the target of a Hopf map p, in the coordinates of Hom_H(U, V)."""
    result = hom_comodule(push_comodule(u, p), push_comodule(v, p), over)
    return HomSpace(u, v, result.space, over)


@dataclass(frozen=True)
class HomChain:
    """Hom_H in Hom_L in Hom_{H_pi} = Hom(U_pi, V_pi) for a factorization through L."""
    host: HomSpace
    middle: HomSpace
    image: HomSpace
    pi: HomSpace

    @property
    def holds(self) -> bool:
        return (self.middle.space.contains(self.host.space)
                and self.image.space.contains(self.middle.space)
                and self.image.space == self.pi.space)

    def dims(self) -> Sequence[int]:
        return (self.host.dim, self.middle.dim, self.image.dim, self.pi.dim)


def factorization_hom_chain(r: Representation, q: HopfMorphism, u: Comodule, v: Comodule,
                            projection: HopfMorphism) -> HomChain:
    """
    The inclusion chain for pi = phi o q through L, given p: H -> H_pi.

    Raises:
        HostMismatch: when q or p does not start at the host of pi
    """
    if q.source != r.source or projection.source != r.source:
        raise HostMismatch("factorization maps must start at the host of pi")
    chain = HomChain(
        hom_comodule(u, v),
        hom_pushed(u, v, q, "L"),
        hom_pushed(u, v, projection, "H_pi"),
        hom_pi(r, u, v),
    )
    logger.info(f"Hom chain for ({u.name}, {v.name}): {chain.dims()}")
    return chain
