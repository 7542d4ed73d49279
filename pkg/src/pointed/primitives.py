"""
Skew-primitive spaces and the pointed inner faithfulness criterion.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from src.hopf.structure import HopfAlgebraData
from src.image.representation import Representation
from src.linalg.matrix import Matrix, Vector
from src.linalg.subspace import Subspace, kernel
from src.pointed.grouplikes import GroupLikeSet, is_grouplike
from src.utils.error_handling import NotGroupLike


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SkewPrimitiveSpace:
    """P_{g,h}(H) = {x : Delta(x) = g (x) x + x (x) h}."""
    g: Vector
    h: Vector
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


def skew_primitives(host: HopfAlgebraData, g: Sequence, k: Sequence) -> SkewPrimitiveSpace:
    """
    Solve Delta(x) - g (x) x - x (x) k = 0.

    Raises:
        NotGroupLike: when g or k is not group-like
    """
    ctx = host.ctx
    g = tuple(ctx.coerce(x) for x in g)
    k = tuple(ctx.coerce(x) for x in k)
    for name, vector in (("g", g), ("h", k)):
        if not is_grouplike(host, vector):
            raise NotGroupLike(f"{name} is not group-like")
    d = host.dim
    # row (j, l), column i: Delta[i][j][l] - g_j delta_il - delta_ij k_l
    rows = []
    for j in range(d):
        for l in range(d):
            row = [host.comult[i][j][l] for i in range(d)]
            if g[j]:
                row[l] = row[l] - g[j]
            if k[l]:
                row[j] = row[j] - k[l]
            if any(row):
                rows.append(row)
    if not rows:
        space = Subspace.full(ctx, d)
    else:
        space = kernel(Matrix.from_rows(ctx, rows, d))
    return SkewPrimitiveSpace(g, k, space)


@dataclass(frozen=True)
class PointedVerdict:
    """holds is True when pi is injective on every skew-primitive space checked."""
    holds: bool
    grouplike: Optional[int] = None
    witness: Optional[Vector] = None
    side: str = "left"

    def __bool__(self):
        return self.holds


def pointed_criterion(r: Representation, gl: GroupLikeSet, side: str = "left") -> PointedVerdict:
    """
    Inner faithfulness test for pointed Hopf algebras.

    For each group-like g, pi restricted to P_{g,1} (side "left") or to
    P_{1,g} (side "right") must be injective. Pointedness of the host is
    taken on trust.

    Returns:
        PointedVerdict; on failure the offending group-like index and a
        nonzero element of the skew-primitive space killed by pi
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    host = r.source
    one = host.unit
    for index, g in enumerate(gl.elements):
        primitives = skew_primitives(host, g, one) if side == "left" else skew_primitives(host, one, g)
        if primitives.space.is_zero():
            continue
        columns = [r.apply(x) for x in primitives.space.basis]
        restricted = Matrix.from_rows(host.ctx, columns, r.target.dim).transpose()
        null = kernel(restricted)
        if not null.is_zero():
            coords = null.basis[0]
            witness = [host.ctx.zero] * host.dim
            for c, x in zip(coords, primitives.space.basis):
                if c:
                    witness = [w + c * v if v else w for w, v in zip(witness, x)]
            logger.info(f"pi is not injective on the skew-primitives of group-like {index}")
            return PointedVerdict(False, index, tuple(witness), side)
    return PointedVerdict(True, side=side)
