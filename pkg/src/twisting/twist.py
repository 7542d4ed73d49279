"""
Drinfeld twists and pseudo-twists.

An invertible Omega in H (x) H deforms the comultiplication either by left
multiplication (delta_Omega(x) = Omega Delta(x)) or by conjugation
(Delta_Omega(x) = Omega Delta(x) Omega^-1). The deformed Hopf algebra H_Omega
keeps the algebra of H and uses S_u(x) = u S(x) u^-1 with u = m(id (x) S)(Omega).
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, List, Optional, Sequence

from src.hopf.algebra import dense_from_sparse, freeze
from src.hopf.ideals import is_hopf_ideal
from src.hopf.structure import HopfAlgebraData, validate
from src.hopf.tensor import (
    TensorElement, _accumulate, apply_counit, apply_linear, from_dense, multiply_slots,
    pure_tensor, tensor_multiply, to_dense
)
from src.image.closure import compute_closure
from src.image.hopf_image import hopf_image
from src.image.representation import Representation
from src.linalg.matrix import Matrix, Vector, solve
from src.linalg.subspace import Subspace
from src.utils.error_handling import DimensionMismatch, NotATwist, NotGroupLike, SingularSystem


logger = logging.getLogger(__name__)

TWIST = "Twist"
PSEUDO_TWIST = "PseudoTwist"
NEITHER = "Neither"


@dataclass(frozen=True)
class TwistElement:
    """
    Omega with its inverse and u = m(id (x) S)(Omega).

    omega and omega_inv are dense coordinates on e_i (x) e_j at index
    i * dim + j. u_inv is None when u is not invertible.
    """
    host: HopfAlgebraData
    omega: Vector
    omega_inv: Vector
    u: Vector
    u_inv: Optional[Vector]

    @property
    def omega_tensor(self) -> TensorElement:
        return from_dense(self.omega, (self.host.dim, self.host.dim))

    @property
    def omega_inv_tensor(self) -> TensorElement:
        return from_dense(self.omega_inv, (self.host.dim, self.host.dim))


def _left_multiplication(algebras, element: TensorElement, dims: Sequence[int], ctx) -> Matrix:
    """Matrix of y -> element * y on the dense coordinates of a tensor product."""
    columns = [to_dense(ctx, tensor_multiply(algebras, element, {key: ctx.one}), dims)
               for key in product(*(range(d) for d in dims))]
    return Matrix.from_rows(ctx, columns, len(columns)).transpose()


def algebra_inverse(algebras, element: TensorElement, dims: Sequence[int], ctx) -> Optional[TensorElement]:
    """Two-sided inverse in a finite-dimensional (tensor) algebra, or None."""
    one = pure_tensor(*(a.unit for a in algebras))
    try:
        dense = solve(_left_multiplication(algebras, element, dims, ctx), to_dense(ctx, one, dims))
    except SingularSystem:
        return None
    return from_dense(dense, dims)


def make_twist(host: HopfAlgebraData, omega: TensorElement,
               omega_inv: Optional[TensorElement] = None) -> TwistElement:
    """
    Package Omega as a TwistElement, solving for Omega^-1 when absent.

    Raises:
        NotATwist: when Omega is not invertible in H (x) H, or a supplied
            inverse is wrong
    """
    ctx = host.ctx
    d = host.dim
    dims = (d, d)
    algebras = host.tensor_square()
    for key in omega:
        if len(key) != 2 or not all(0 <= i < d for i in key):
            raise DimensionMismatch(f"twist coordinate {key} outside H (x) H of dimension {d}")
    if omega_inv is None:
        omega_inv = algebra_inverse(algebras, omega, dims, ctx)
        if omega_inv is None:
            raise NotATwist("Omega is not invertible in H (x) H")
    one = pure_tensor(host.unit, host.unit)
    if tensor_multiply(algebras, omega, omega_inv) != one or tensor_multiply(algebras, omega_inv, omega) != one:
        raise NotATwist("supplied Omega^-1 is not the inverse of Omega")

    u_tensor = multiply_slots(host.algebra, apply_linear(host.antipode, omega, 1), 0)
    u = to_dense(ctx, u_tensor, (d,))
    u_inv_tensor = algebra_inverse([host.algebra], u_tensor, (d,), ctx)
    u_inv = to_dense(ctx, u_inv_tensor, (d,)) if u_inv_tensor is not None else None
    if u_inv is None:
        logger.info("u = m(id (x) S)(Omega) is not invertible")
    return TwistElement(host, to_dense(ctx, omega, dims), to_dense(ctx, omega_inv, dims), u, u_inv)


def _apply_images(images: List[TensorElement], t: TensorElement, slot: int) -> TensorElement:
    """Replace slot by the two-slot image of each basis vector."""
    result: TensorElement = {}
    for key, value in t.items():
        for (j, k), c in images[key[slot]].items():
            _accumulate(result, key[:slot] + (j, k) + key[slot + 1:], value * c)
    return result


def _coalgebra_failure(host: HopfAlgebraData, images: List[TensorElement]) -> Optional[str]:
    """Name of the first coalgebra axiom the comultiplication images break."""
    ctx = host.ctx
    for i, image in enumerate(images):
        if _apply_images(images, image, 0) != _apply_images(images, image, 1):
            return f"coassociativity at basis element {i}"
        if apply_counit(host, image, 0) != {(i,): ctx.one}:
            return f"left counit at basis element {i}"
        if apply_counit(host, image, 1) != {(i,): ctx.one}:
            return f"right counit at basis element {i}"
    return None


def twisted_comultiplications(t: TwistElement, conjugate: bool) -> List[TensorElement]:
    """Omega Delta(e_i) or Omega Delta(e_i) Omega^-1 for every basis vector."""
    host = t.host
    algebras = host.tensor_square()
    omega = t.omega_tensor
    omega_inv = t.omega_inv_tensor
    images = []
    for i in range(host.dim):
        image = tensor_multiply(algebras, omega, host.comultiply(host.basis_vector(i)))
        if conjugate:
            image = tensor_multiply(algebras, image, omega_inv)
        images.append(image)
    return images


def _twisted_antipode(t: TwistElement) -> Optional[Matrix]:
    if t.u_inv is None:
        return None
    host = t.host
    columns = [host.multiply(host.multiply(t.u, host.antipode.column(i)), t.u_inv)
               for i in range(host.dim)]
    return Matrix.from_rows(host.ctx, columns, host.dim).transpose()


def _antipode_failure(host: HopfAlgebraData, images: List[TensorElement], antipode: Matrix) -> Optional[str]:
    for i, image in enumerate(images):
        expected = pure_tensor(tuple(host.counit[i] * x for x in host.unit))
        for slot, side in ((0, "left"), (1, "right")):
            if multiply_slots(host.algebra, apply_linear(antipode, image, slot), 0) != expected:
                return f"{side} antipode at basis element {i}"
    return None


@dataclass(frozen=True)
class TwistVerdict:
    """Classification of Omega; witness names the identity that failed."""
    kind: str
    witness: Optional[str] = None

    def __bool__(self):
        return self.kind != NEITHER


def check_pseudo_twist(t: TwistElement) -> TwistVerdict:
    """
    Classify Omega as Twist, PseudoTwist or Neither.

    Twist when Omega is counit-normalized and delta_Omega is coassociative and
    counital. PseudoTwist when instead Delta_Omega is a coalgebra and S_u, for
    the canonical u, is an antipode for it.
    """
    host = t.host
    omega = t.omega_tensor
    unit_tensor = pure_tensor(host.unit)
    if apply_counit(host, omega, 0) != unit_tensor:
        return TwistVerdict(NEITHER, "(epsilon (x) id)(Omega) = 1")
    if apply_counit(host, omega, 1) != unit_tensor:
        return TwistVerdict(NEITHER, "(id (x) epsilon)(Omega) = 1")

    failure = _coalgebra_failure(host, twisted_comultiplications(t, conjugate=False))
    if failure is None:
        logger.info("Omega is a twist")
        return TwistVerdict(TWIST)
    logger.debug(f"delta_Omega fails {failure}")

    conjugated = twisted_comultiplications(t, conjugate=True)
    conjugated_failure = _coalgebra_failure(host, conjugated)
    if conjugated_failure is not None:
        return TwistVerdict(NEITHER, f"Delta_Omega {conjugated_failure}")
    antipode = _twisted_antipode(t)
    if antipode is None:
        return TwistVerdict(NEITHER, "u = m(id (x) S)(Omega) is not invertible")
    antipode_failure = _antipode_failure(host, conjugated, antipode)
    if antipode_failure is not None:
        return TwistVerdict(NEITHER, f"S_u {antipode_failure}")
    logger.info("Omega is a pseudo-twist")
    return TwistVerdict(PSEUDO_TWIST)


def twist_hopf(t: TwistElement) -> HopfAlgebraData:
    """
    H_Omega = (H, m, 1, Delta_Omega, epsilon, S_u).

    Raises:
        NotATwist: when Omega is neither a twist nor a pseudo-twist
    """
    verdict = check_pseudo_twist(t)
    if not verdict:
        raise NotATwist(f"Omega is neither a twist nor a pseudo-twist: {verdict.witness}")
    host = t.host
    antipode = _twisted_antipode(t)
    if antipode is None:
        raise NotATwist("u = m(id (x) S)(Omega) is not invertible")
    entries = [(i, j, k, c) for i, image in enumerate(twisted_comultiplications(t, conjugate=True))
               for (j, k), c in image.items()]
    twisted = HopfAlgebraData(
        host.algebra,
        freeze(dense_from_sparse(host.ctx, host.dim, entries, 3)),
        host.counit,
        antipode,
    )
    report = validate(twisted, "twisted hopf algebra")
    if not report.ok:
        raise NotATwist(f"H_Omega fails {[c.name for c in report.failures()]}")
    return twisted


def group_twist(host: HopfAlgebraData, a: Sequence, b: Sequence,
                beta: Optional[Callable[[tuple, tuple], int]] = None) -> TwistElement:
    """
    Omega = sum beta(chi, psi) e_chi (x) e_psi over the characters of <a, b>.

    a and b are commuting group-likes of order two generating a Klein
    four-group; e_chi = 1/4 sum chi(k) k are its minimal idempotents. beta
    takes character exponents (m, n), (m', n') and defaults to
    (-1)^(n m'), a non-symmetric bicharacter.

    Raises:
        NotGroupLike: when a or b is not a group-like of order two
    """
    ctx = host.ctx
    a = tuple(ctx.coerce(x) for x in a)
    b = tuple(ctx.coerce(x) for x in b)
    for name, g in (("a", a), ("b", b)):
        if host.apply_counit(g) != 1 or host.comultiply(g) != pure_tensor(g, g):
            raise NotGroupLike(f"{name} is not group-like")
        if host.multiply(g, g) != host.unit or g == host.unit:
            raise NotGroupLike(f"{name} does not have order two")
    if host.multiply(a, b) != host.multiply(b, a) or a == b:
        raise NotGroupLike("a and b do not generate a Klein four-group")
    if beta is None:
        beta = lambda chi, psi: (-1) ** (chi[1] * psi[0])

    elements = {}
    for i in range(2):
        for j in range(2):
            elements[(i, j)] = host.algebra.product([a] * i + [b] * j)
    quarter = ctx.rational(1) / 4
    idempotents = {}
    for m in range(2):
        for n in range(2):
            e = [ctx.zero] * host.dim
            for (i, j), k in elements.items():
                sign = (-1) ** (m * i + n * j)
                e = [x + sign * quarter * y if y else x for x, y in zip(e, k)]
            idempotents[(m, n)] = tuple(e)

    omega: TensorElement = {}
    for chi, e_chi in idempotents.items():
        for psi, e_psi in idempotents.items():
            coefficient = ctx.coerce(beta(chi, psi))
            for key, value in pure_tensor(e_chi, e_psi).items():
                _accumulate(omega, key, coefficient * value)
    return make_twist(host, omega)


@dataclass(frozen=True)
class TransportVerdict:
    """is_hopf_ideal in H and in H_Omega for the same subspace."""
    in_host: bool
    in_twisted: bool

    @property
    def agrees(self) -> bool:
        return self.in_host == self.in_twisted

    def __bool__(self):
        return self.agrees


def hopf_ideal_transport(host: HopfAlgebraData, t: TwistElement, i: Subspace,
                         twisted: Optional[HopfAlgebraData] = None) -> TransportVerdict:
    """Hopf ideals of H and of H_Omega coincide; both verdicts are reported."""
    twisted = twisted or twist_hopf(t)
    verdict = TransportVerdict(bool(is_hopf_ideal(host, i)), bool(is_hopf_ideal(twisted, i)))
    if not verdict.agrees:
        logger.warning(f"Hopf ideal verdicts differ: host {verdict.in_host}, twisted {verdict.in_twisted}")
    return verdict


@dataclass(frozen=True)
class TwistedImageVerdict:
    """I_pi on H and H_Omega, and the kind of (p (x) p)(Omega) on H_pi."""
    host_ideal: Subspace
    twisted_ideal: Subspace
    pushforward: TwistVerdict

    @property
    def ideals_equal(self) -> bool:
        return self.host_ideal == self.twisted_ideal

    def __bool__(self):
        return self.ideals_equal and bool(self.pushforward)


def twisted_hopf_image_check(r: Representation, t: TwistElement,
                             twisted: Optional[HopfAlgebraData] = None) -> TwistedImageVerdict:
    """
    Compare I_pi over H and over H_Omega, and push Omega to the Hopf image.

    pi is the same linear map on both sides since H_Omega shares the
    algebra of H.
    """
    twisted = twisted or twist_hopf(t)
    host_ideal = compute_closure(r).ideal
    twisted_ideal = compute_closure(Representation(twisted, r.target, r.matrix)).ideal

    image = hopf_image(r)
    p = image.projection.matrix
    pushed = apply_linear(p, apply_linear(p, t.omega_tensor, 0), 1)
    pushed_inv = apply_linear(p, apply_linear(p, t.omega_inv_tensor, 0), 1)
    pushforward = check_pseudo_twist(make_twist(image.image, pushed, pushed_inv))
    logger.info(f"Twisted Hopf image: dim I = {host_ideal.dim} / {twisted_ideal.dim}, "
                f"pushforward {pushforward.kind}")
    return TwistedImageVerdict(host_ideal, twisted_ideal, pushforward)
