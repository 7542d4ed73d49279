"""
Hopf images, inner faithfulness and factorizations.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from src.hopf.ideals import is_hopf_ideal, quotient_hopf
from src.hopf.structure import HopfAlgebraData, HopfMorphism, validate_morphism
from src.image.closure import ConvolutionClosure, compute_closure
from src.image.representation import Representation, hopf_map_rep, require_valid, tensor_rep
from src.linalg.matrix import Matrix, kronecker, matmul, solve
from src.linalg.subspace import Subspace, kernel, quotient_data
from src.utils.error_handling import (
    ClosureInvariantError, InvalidRepresentation, NotAHopfIdeal, ShapeMismatch
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopfImageResult:
    """H_pi = H / I_pi with p: H -> H_pi and the induced pi~ on A."""
    closure: ConvolutionClosure
    ideal: Subspace
    image: HopfAlgebraData
    projection: HopfMorphism
    induced: Representation

    @property
    def dim(self) -> int:
        return self.image.dim


def hopf_image(r: Representation) -> HopfImageResult:
    """
    Factor pi through its Hopf image.

    Args:
        r: Validated representation

    Returns:
        HopfImageResult with pi~ o p = pi

    Raises:
        InvalidRepresentation: when r is not a unital algebra map
    """
    closure = compute_closure(r)
    image, projection = quotient_hopf(r.source, closure.ideal)
    _, section = quotient_data(closure.ideal)
    induced = Representation(image, r.target, matmul(r.matrix, section))
    if matmul(induced.matrix, projection.matrix) != r.matrix:
        raise ClosureInvariantError("induced representation does not factor pi")
    logger.info(f"Hopf image: dim {r.source.dim} -> {image.dim}")
    return HopfImageResult(closure, closure.ideal, image, projection, induced)


def is_inner_faithful(r: Representation) -> bool:
    """True iff I_pi = 0."""
    ideal = compute_closure(r).ideal
    logger.info(f"Inner faithfulness: dim I = {ideal.dim}")
    return ideal.is_zero()


def is_projectively_inner_faithful(r: Representation) -> bool:
    """pi is projectively inner faithful when pi (x) pi is inner faithful."""
    return is_inner_faithful(tensor_rep(r, r))


def maximality_check(r: Representation, j: Subspace) -> bool:
    """
    Any Hopf ideal J inside Ker(pi) lies inside I_pi.

    Raises:
        NotAHopfIdeal: when J is not a Hopf ideal contained in Ker(pi)
    """
    verdict = is_hopf_ideal(r.source, j)
    if not verdict:
        raise NotAHopfIdeal(verdict.describe())
    if not r.kernel().contains(j):
        raise NotAHopfIdeal("J is not contained in Ker(pi)")
    return compute_closure(r).ideal.contains(j)


@dataclass(frozen=True)
class FactorizationVerdict:
    """Outcome of check_factorization."""
    factors: bool
    universal_map_exists: bool
    universal_map: Optional[HopfMorphism] = None
    is_isomorphism: bool = False
    failure: Optional[str] = None

    def __bool__(self):
        return self.factors and self.universal_map_exists


def check_factorization(r: Representation, q: HopfMorphism, phi: Representation) -> FactorizationVerdict:
    """
    Check a factorization pi = phi o q through a Hopf algebra L.

    Verifies phi o q = pi, that q is onto L, then that the universal map
    L -> H_pi exists, i.e. Ker(q) is inside I_pi. When it does, the map f
    with f o q = p is built and validated as a Hopf morphism. A negative
    verdict names the first failed check in failure.

    Raises:
        ShapeMismatch: when the three maps cannot be composed
    """
    if q.source.dim != r.source.dim or phi.source.dim != q.target.dim or phi.target.dim != r.target.dim:
        raise ShapeMismatch("pi, q and phi do not compose")
    factors = matmul(phi.matrix, q.matrix) == r.matrix
    if not factors:
        logger.info("phi o q differs from pi")
        return FactorizationVerdict(False, False, failure="phi o q differs from pi")
    if not q.is_surjective():
        logger.info(f"q has rank {q.rank()} onto a {q.target.dim}-dimensional L")
        return FactorizationVerdict(True, False, failure="q is not surjective")

    result = hopf_image(r)
    if not result.ideal.contains(q.kernel()):
        return FactorizationVerdict(True, False, failure="Ker(q) is not inside I_pi")

    # f(e_l) = p(x) for any x with q(x) = e_l
    ctx = r.ctx
    columns = []
    for l in range(q.target.dim):
        target = tuple(ctx.one if i == l else ctx.zero for i in range(q.target.dim))
        columns.append(result.projection.apply(solve(q.matrix, target)))
    f_matrix = Matrix.from_rows(ctx, columns, result.image.dim).transpose()
    universal = HopfMorphism(q.target, result.image, f_matrix)
    report = validate_morphism(universal, "universal map")
    if not report.ok:
        raise ClosureInvariantError(f"universal map fails: {[c.name for c in report.failures()]}")
    iso = universal.is_injective() and universal.is_surjective()
    return FactorizationVerdict(True, True, universal, iso)


def hopf_map_kernel_check(q: HopfMorphism) -> bool:
    """For a Hopf algebra map viewed as a representation, I_pi = Ker(pi)."""
    return compute_closure(hopf_map_rep(q)).ideal == q.kernel()


def tensor_image_surjection(r: Representation, s: Representation) -> bool:
    """
    Ker(p_pi (x) p_phi) lies inside I_{pi (x) phi}, so H_pi (x) L_phi maps
    onto the Hopf image of pi (x) phi.
    """
    left = hopf_image(r)
    right = hopf_image(s)
    product_kernel = kernel(kronecker(left.projection.matrix, right.projection.matrix))
    return compute_closure(tensor_rep(r, s)).ideal.contains(product_kernel)


def faithful_tensor_ideal(r: Representation, s: Representation) -> bool:
    """
    For faithful pi on H with injective antipode, I_{pi (x) phi} = H (x) I_phi.

    Raises:
        InvalidRepresentation: when pi is not faithful or S is not injective
    """
    require_valid(r)
    if not r.is_faithful():
        raise InvalidRepresentation("left factor must be faithful")
    if not kernel(r.source.antipode).is_zero():
        raise InvalidRepresentation("left factor needs an injective antipode")
    ideal_s = compute_closure(s).ideal
    h_dim = r.source.dim
    l_dim = s.source.dim
    ctx = r.ctx
    vectors = []
    for i in range(h_dim):
        for x in ideal_s.basis:
            v = [ctx.zero] * (h_dim * l_dim)
            for a, c in enumerate(x):
                v[i * l_dim + a] = c
            vectors.append(v)
    expected = Subspace.span(ctx, h_dim * l_dim, vectors)
    return compute_closure(tensor_rep(r, s)).ideal == expected
