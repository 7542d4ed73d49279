"""
Hopf ideals and quotient Hopf algebras.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from src.hopf.structure import HopfAlgebraData, HopfMorphism
from src.linalg.matrix import Matrix, Vector
from src.linalg.subspace import Subspace, quotient_data
from src.utils.error_handling import DimensionMismatch, NotAHopfIdeal


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopfIdealVerdict:
    """Result of is_hopf_ideal; truthy exactly when the subspace is a Hopf ideal."""
    holds: bool
    failed: Optional[str] = None
    witness: Optional[Vector] = None
    partner: Optional[int] = None

    def __bool__(self):
        return self.holds

    def describe(self) -> str:
        if self.holds:
            return "Hopf ideal"
        where = f" with basis element {self.partner}" if self.partner is not None else ""
        return f"not a Hopf ideal: {self.failed} fails{where}"


def _coideal_image(h: HopfAlgebraData, projection: Matrix, x: Vector) -> bool:
    """True when (P (x) P) Delta(x) vanishes."""
    q = projection.rows
    if q == 0:
        return True
    delta = h.comultiply(x)
    # right slot first: rows[j] = P applied to sum_k c_jk e_k
    partial = {}
    for (j, k), c in delta.items():
        row = partial.setdefault(j, [h.ctx.zero] * q)
        column = projection.column(k)
        for u in range(q):
            if column[u]:
                row[u] = row[u] + c * column[u]
    for t in range(q):
        for u in range(q):
            total = h.ctx.zero
            for j, row in partial.items():
                p = projection.get(t, j)
                if p and row[u]:
                    total = total + p * row[u]
            if total:
                return False
    return True


def is_hopf_ideal(h: HopfAlgebraData, i: Subspace) -> HopfIdealVerdict:
    """
    Decide whether i is a two-sided ideal, a coideal and S-stable.

    The coideal inclusion Delta(i) in i(x)H + H(x)i is tested as
    (P (x) P) Delta(x) = 0, P being the projection onto H / i, since
    i(x)H + H(x)i is exactly the kernel of P (x) P.

    Args:
        h: Host Hopf algebra
        i: Candidate subspace of H

    Returns:
        HopfIdealVerdict naming the first failed inclusion and the basis
        vector of i where it fails
    """
    if i.ambient != h.dim:
        raise DimensionMismatch(f"subspace of ambient dimension {i.ambient} in a Hopf algebra of dimension {h.dim}")
    if i.is_zero():
        return HopfIdealVerdict(True)
    projection, _ = quotient_data(i)
    for x in i.basis:
        for j in range(h.dim):
            e = h.basis_vector(j)
            if not i.contains_vector(h.multiply(e, x)):
                return HopfIdealVerdict(False, "left ideal (H i in i)", x, j)
            if not i.contains_vector(h.multiply(x, e)):
                return HopfIdealVerdict(False, "right ideal (i H in i)", x, j)
        if h.apply_counit(x):
            return HopfIdealVerdict(False, "counit (epsilon(i) = 0)", x)
        if not _coideal_image(h, projection, x):
            return HopfIdealVerdict(False, "coideal (Delta(i) in i(x)H + H(x)i)", x)
        if not i.contains_vector(h.apply_antipode(x)):
            return HopfIdealVerdict(False, "antipode (S(i) in i)", x)
    return HopfIdealVerdict(True)


def quotient_hopf(h: HopfAlgebraData, i: Subspace) -> Tuple[HopfAlgebraData, HopfMorphism]:
    """
    The quotient H / i on the non-pivot coordinates of i.

    Returns:
        (quotient Hopf algebra, canonical projection H -> H / i)

    Raises:
        NotAHopfIdeal: when i is not a Hopf ideal
    """
    verdict = is_hopf_ideal(h, i)
    if not verdict:
        raise NotAHopfIdeal(verdict.describe())
    projection, section = quotient_data(i)
    ctx = h.ctx
    q = projection.rows
    kept = [next(r for r in range(h.dim) if section.get(r, a)) for a in range(q)]

    mult = []
    for a in range(q):
        for b in range(q):
            for c, value in enumerate(projection.apply(h.mult[kept[a]][kept[b]])):
                if value:
                    mult.append((a, b, c, value))
    unit = projection.apply(h.unit)

    comult = []
    for a in range(q):
        pushed = {}
        for j, k, value in h.comult_terms[kept[a]]:
            left = projection.column(j)
            right = projection.column(k)
            for t in range(q):
                if left[t]:
                    for u in range(q):
                        if right[u]:
                            pushed[(t, u)] = pushed.get((t, u), ctx.zero) + value * left[t] * right[u]
        comult.extend((a, t, u, value) for (t, u), value in pushed.items() if value)
    counit = [h.counit[r] for r in kept]

    antipode = []
    for a in range(q):
        image = projection.apply(h.antipode.column(kept[a]))
        antipode.extend((t, a, value) for t, value in enumerate(image) if value)

    labels = [h.labels[r] for r in kept]
    quotient = HopfAlgebraData.from_sparse(ctx, labels, mult, unit, comult, counit, antipode)
    logger.info(f"Quotient by a {i.dim}-dimensional Hopf ideal: dim {h.dim} -> {q}")
    return quotient, HopfMorphism(h, quotient, projection)
