"""Comodules, morphism spaces and comodule-based inner faithfulness criteria."""

from src.tannaka.comodule import (
    Comodule, character_comodule, dual_comodule, is_faithful_comodule, make_comodule,
    push_comodule, regular_comodule, tensor_comodule, trivial_comodule, validate_comodule,
    word_comodule
)
from src.tannaka.criteria import (
    LevelTwoReport, TannakaReport, TruncatedVerdict, enumerate_words, level_two_criterion,
    tannaka_equality_check, truncated_fixedpoint_criterion
)
from src.tannaka.hom import HomChain, HomSpace, factorization_hom_chain, hom_comodule, hom_pi
