"""
Inner faithfulness tests through comodule morphisms.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from config import SELF_DUAL_ALPHABET, WORD_ALPHABET
from src.image.hopf_image import hopf_image, is_inner_faithful
from src.image.representation import Representation
from src.linalg.matrix import Vector
from src.linalg.subspace import Subspace
from src.pointed.grouplikes import GroupLikeSet
from src.tannaka.comodule import (
    Comodule, dual_comodule, is_faithful_comodule, tensor_comodule, trivial_comodule
)
from src.tannaka.hom import hom_comodule, hom_pi, hom_pushed
from src.utils.error_handling import DimensionMismatch, HostMismatch


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TannakaRow:
    source: str
    target: str
    dim_host: int
    dim_image: int
    dim_pi: int
    image_equals_pi: bool

    @property
    def strict(self) -> bool:
        return self.dim_host < self.dim_pi


@dataclass
class TannakaReport:
    """
    One row per comodule pair.

    conclusion is False when some pair shows Hom_H strictly smaller than
    Hom(U_pi, V_pi), True when the pairs were declared exhaustive and no gap
    appeared, None otherwise.
    """
    rows: List[TannakaRow] = field(default_factory=list)
    exhaustive: bool = False
    engine_inner_faithful: Optional[bool] = None

    @property
    def chain_holds(self) -> bool:
        return all(row.image_equals_pi for row in self.rows)

    @property
    def strict_pairs(self) -> List[Tuple[str, str]]:
        return [(row.source, row.target) for row in self.rows if row.strict]

    @property
    def conclusion(self) -> Optional[bool]:
        if self.strict_pairs:
            return False
        if self.exhaustive:
            return True
        return None

    @property
    def agrees(self) -> bool:
        return self.conclusion is None or self.conclusion == self.engine_inner_faithful


def tannaka_equality_check(r: Representation, pairs: Sequence[Tuple[Comodule, Comodule]],
                           exhaustive: bool = False) -> TannakaReport:
    """
    Compare Hom_H(U, V), Hom_{H_pi}(U, V) and Hom(U_pi, V_pi) pair by pair.

    Args:
        r: Representation of H
        pairs: Comodule pairs over H
        exhaustive: Caller asserts the pairs run over all simple comodules
            of a cosemisimple H with cosemisimple Hopf image

    Returns:
        TannakaReport, with the engine's own verdict for comparison
    """
    image = hopf_image(r)
    report = TannakaReport(exhaustive=exhaustive, engine_inner_faithful=image.ideal.is_zero())
    for u, v in pairs:
        over_host = hom_comodule(u, v)
        over_image = hom_pushed(u, v, image.projection, "H_pi")
        over_pi = hom_pi(r, u, v)
        report.rows.append(TannakaRow(
            u.name, v.name, over_host.dim, over_image.dim, over_pi.dim,
            over_image.space == over_pi.space,
        ))
    if not report.chain_holds:
        logger.error("Hom over the Hopf image differs from the pi-morphism space")
    if not report.agrees:
        logger.warning(f"Comodule verdict {report.conclusion} disagrees with the engine "
                       f"({report.engine_inner_faithful})")
    logger.info(f"Checked {len(report.rows)} comodule pairs; {len(report.strict_pairs)} strict")
    return report


def enumerate_words(alphabet: str, max_len: int) -> Iterator[str]:
    """Words of length 0..max_len in shortlex order."""
    for length in range(max_len + 1):
        for letters in product(alphabet, repeat=length):
            yield "".join(letters)


@dataclass(frozen=True)
class TruncatedVerdict:
    """
    ViolatedAt(word) when violated_at is set, NoViolationUpTo(max_len)
    otherwise. Only a violation is conclusive.
    """
    max_len: int
    violated_at: Optional[str] = None
    words_checked: int = 0
    faithful_comodule: bool = True

    @property
    def violated(self) -> bool:
        return self.violated_at is not None

    def describe(self) -> str:
        if self.violated:
            return f"ViolatedAt({self.violated_at})"
        return f"NoViolationUpTo({self.max_len})"


def truncated_fixedpoint_criterion(r: Representation, u: Comodule, max_len: int,
                                   self_dual: Optional[bool] = None) -> TruncatedVerdict:
    """
    Compare invariants dim Hom_H(k, U^x) with dim Hom(k_pi, U^x_pi) for all
    words x up to max_len.

    A strict inequality proves pi is not inner faithful. Agreement on every
    word up to max_len is only evidence. For a self-dual U the alphabet is {a}.
    """
    if u.host != r.source:
        raise HostMismatch("comodule and representation live on different Hopf algebras")
    if max_len < 0:
        raise ValueError(f"max_len must be non-negative, got {max_len}")
    self_dual = u.self_dual if self_dual is None else self_dual
    alphabet = SELF_DUAL_ALPHABET if self_dual else WORD_ALPHABET
    faithful = is_faithful_comodule(u)
    if not faithful:
        logger.warning(f"Coefficients of {u.name} do not generate H; the criterion does not apply")

    trivial = trivial_comodule(u.host)
    letters = {"a": u}
    if "b" in alphabet:
        letters["b"] = dual_comodule(u)
    built: Dict[str, Comodule] = {"": trivial}
    checked = 0
    for word in enumerate_words(alphabet, max_len):
        if word:
            prefix = built[word[:-1]]
            factor = letters[word[-1]]
            built[word] = factor if not word[:-1] else tensor_comodule(prefix, factor)
        w = built[word]
        checked += 1
        host_dim = hom_comodule(trivial, w).dim
        pi_dim = hom_pi(r, trivial, w).dim
        if host_dim < pi_dim:
            logger.info(f"Invariants of {word or 'the empty word'} jump from {host_dim} to {pi_dim} under pi")
            return TruncatedVerdict(max_len, word, checked, faithful)
    logger.warning(f"No violation for words up to length {max_len}; this is not a proof of inner faithfulness")
    return TruncatedVerdict(max_len, None, checked, faithful)


def _independent(x: Vector, y: Vector) -> bool:
    """Two vectors span a plane."""
    if not any(x) or not any(y):
        return False
    return Subspace.span(x[0].context, len(x), [x, y]).dim == 2


@dataclass
class LevelTwoReport:
    """The five conditions in order, each with a short detail on failure."""
    conditions: List[Tuple[str, bool, str]] = field(default_factory=list)
    engine_inner_faithful: Optional[bool] = None

    @property
    def holds(self) -> bool:
        return all(passed for _, passed, _ in self.conditions)

    def __bool__(self):
        return self.holds

    @property
    def consistent(self) -> bool:
        """A passing check must be confirmed by the engine."""
        return not self.holds or self.engine_inner_faithful in (None, True)

    def failed(self) -> List[str]:
        return [name for name, passed, _ in self.conditions if not passed]


def level_two_criterion(r: Representation, gl: GroupLikeSet, twodim: Sequence[Comodule],
                        cross_check: bool = True) -> LevelTwoReport:
    """
    Sufficient conditions for inner faithfulness on a Hopf algebra whose
    simple comodules have dimension at most two.

    The caller asserts that gl lists all group-likes and twodim all simple
    two-dimensional comodules. Conditions:
      1. pi separates the group-likes
      2. pi(u11) = pi(u22) = 0 for every two-dimensional comodule
      3. pi(u12^l) and pi(g) are linearly independent for all l, g
      4. pi(u12^l) and pi(u21^m) are linearly independent for all l, m
      5. pi(u12^l) and pi(u12^m) are linearly independent for l != m
    """
    for u in twodim:
        if u.dim != 2:
            raise DimensionMismatch(f"comodule {u.name} has dimension {u.dim}, expected 2")
        if u.host != r.source:
            raise HostMismatch(f"comodule {u.name} lives on another Hopf algebra")
    report = LevelTwoReport()

    images = [r.apply(g) for g in gl.elements]
    collision = next(((a, b) for a in range(len(images)) for b in range(a + 1, len(images))
                      if images[a] == images[b]), None)
    report.conditions.append(("group-likes separated", collision is None,
                              "" if collision is None else f"group-likes {collision[0]} and {collision[1]} collide"))

    nonzero = next((u.name for u in twodim
                    if any(r.apply(u.coefficient(0, 0))) or any(r.apply(u.coefficient(1, 1)))), None)
    report.conditions.append(("diagonal coefficients vanish", nonzero is None,
                              "" if nonzero is None else f"on {nonzero}"))

    upper = [(u.name, r.apply(u.coefficient(0, 1))) for u in twodim]
    lower = [(u.name, r.apply(u.coefficient(1, 0))) for u in twodim]
    bad = next((f"{name} against group-like {a}" for name, x in upper
                for a, y in enumerate(images) if not _independent(x, y)), None)
    report.conditions.append(("u12 independent of group-likes", bad is None, bad or ""))
    bad = next((f"{name} against {other}" for name, x in upper
                for other, y in lower if not _independent(x, y)), None)
    report.conditions.append(("u12 independent of u21", bad is None, bad or ""))
    bad = next((f"{upper[a][0]} against {upper[b][0]}" for a in range(len(upper))
                for b in range(a + 1, len(upper)) if not _independent(upper[a][1], upper[b][1])), None)
    report.conditions.append(("u12 pairwise independent", bad is None, bad or ""))

    if cross_check:
        report.engine_inner_faithful = is_inner_faithful(r)
        if not report.consistent:
            logger.error("Level-two conditions pass but the engine finds a nonzero Hopf ideal")
    logger.info(f"Level-two criterion: {'pass' if report.holds else 'fail ' + ', '.join(report.failed())}")
    return report
