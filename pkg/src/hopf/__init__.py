"""Hopf algebras by structure constants: axioms, duals, tensor products and quotients."""

from src.hopf.algebra import (
    AlgebraData, is_commutative, matrix_algebra, product_algebra, tensor_algebra, validate_algebra
)
from src.hopf.ideals import HopfIdealVerdict, is_hopf_ideal, quotient_hopf
from src.hopf.report import AxiomCheck, ValidationReport
from src.hopf.structure import (
    HopfAlgebraData, HopfMorphism, dual, is_cocommutative, tensor_hopf, trivial_hopf,
    validate, validate_morphism
)
