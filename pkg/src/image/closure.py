"""
The convolution closure C_pi of the coefficient functionals of a representation.

C_pi is the smallest unital convolution subalgebra of H* that contains the
coefficient functionals psi o pi and is stable under the dual antipode
f -> f o S. Its annihilator in H is the largest Hopf ideal I_pi inside
Ker(pi). The word-indexed family of representations pi^g is never built:
the fixpoint runs in the d-dimensional space H* directly.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from config import MAX_CLOSURE_ROUNDS, VERIFY_CLOSURE_POSTCONDITIONS
from src.hopf.ideals import is_hopf_ideal
from src.hopf.structure import HopfAlgebraData
from src.image.representation import Representation, require_valid
from src.linalg.matrix import Vector
from src.linalg.subspace import EchelonBasis, Subspace, annihilator
from src.utils.error_handling import ClosureInvariantError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvolutionClosure:
    """
    Generator space W (S-stable), closure C and ideal I = C^perp.

    trace lists dim W after each antipode round, then dim C after each
    convolution round.
    """
    host: HopfAlgebraData
    generators: Subspace
    closure: Subspace
    ideal: Subspace
    antipode_trace: Tuple[int, ...]
    trace: Tuple[int, ...]

    @property
    def rounds(self) -> int:
        return len(self.trace)

    def is_convolution_stable(self) -> bool:
        """C * C in C and C o S in C, checked on basis pairs."""
        h = self.host
        for f in self.closure.basis:
            if not self.closure.contains_vector(h.antipode.apply_left(f)):
                return False
            for g in self.closure.basis:
                if not self.closure.contains_vector(convolve(h, f, g)):
                    return False
        return self.closure.contains_vector(h.counit)


def convolve(h: HopfAlgebraData, f: Sequence, g: Sequence) -> Vector:
    """(f * g)(e_i) = sum Delta[i][j][k] f_j g_k."""
    result = []
    zero = h.ctx.zero
    for terms in h.comult_terms:
        total = zero
        for j, k, c in terms:
            a = f[j]
            if a:
                b = g[k]
                if b:
                    total = total + c * a * b
        result.append(total)
    return tuple(result)


def antipode_closure(h: HopfAlgebraData, seeds: Sequence[Sequence]) -> Tuple[EchelonBasis, List[int]]:
    """Span of the seeds and all their images under f -> f o S^n."""
    basis = EchelonBasis(h.ctx, h.dim)
    frontier = [tuple(v) for v in seeds if basis.add(v)]
    trace = [basis.dim]
    while frontier:
        added = []
        for f in frontier:
            image = h.antipode.apply_left(f)
            if basis.add(image):
                added.append(image)
        frontier = added
        if added:
            trace.append(basis.dim)
    return basis, trace


def compute_closure(r: Representation) -> ConvolutionClosure:
    """
    Compute C_pi and I_pi for a representation.

    W starts as the row space of pi and is closed under the dual antipode;
    C starts as span(epsilon) + W and grows by C * W until stable. Only the
    vectors added in the previous round are multiplied again.

    Args:
        r: Validated representation

    Returns:
        ConvolutionClosure

    Raises:
        InvalidRepresentation: when r is not a unital algebra map
        ClosureInvariantError: when a postcondition check fails
    """
    require_valid(r)
    h = r.source
    seeds = [r.matrix.row(i) for i in range(r.matrix.rows)]
    w_basis, antipode_trace = antipode_closure(h, seeds)
    generators = w_basis.subspace()
    logger.debug(f"Generator space: dim {generators.dim} after {len(antipode_trace)} antipode rounds")

    closure = EchelonBasis(h.ctx, h.dim)
    frontier = [v for v in [h.counit] + list(w_basis.originals) if closure.add(v)]
    trace = [closure.dim]
    w_vectors = list(w_basis.originals)
    rounds = 0
    while frontier and closure.dim < h.dim:
        rounds += 1
        if rounds > MAX_CLOSURE_ROUNDS:
            raise ClosureInvariantError(f"closure did not stabilize after {MAX_CLOSURE_ROUNDS} rounds")
        added = []
        for f in frontier:
            for g in w_vectors:
                product = convolve(h, f, g)
                if closure.add(product):
                    added.append(product)
        frontier = added
        trace.append(closure.dim)
        logger.debug(f"Convolution round {rounds}: dim C = {closure.dim}")

    c_space = closure.subspace()
    ideal = annihilator(c_space)
    result = ConvolutionClosure(h, generators, c_space, ideal, tuple(antipode_trace), tuple(trace))
    logger.info(f"Closure reached dim {c_space.dim} of {h.dim}; dim I = {ideal.dim}")

    if VERIFY_CLOSURE_POSTCONDITIONS:
        verify_postconditions(r, result)
    return result


def verify_postconditions(r: Representation, closure: ConvolutionClosure):
    """I is a Hopf ideal contained in Ker(pi)."""
    verdict = is_hopf_ideal(r.source, closure.ideal)
    if not verdict:
        raise ClosureInvariantError(f"computed ideal is {verdict.describe()}")
    if not r.kernel().contains(closure.ideal):
        raise ClosureInvariantError("computed ideal is not contained in Ker(pi)")
