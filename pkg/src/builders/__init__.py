"""
Builders for the example families: group and function algebras of finite
groups, Taft algebras and the quotients A(k, e).
"""

from src.builders.ake import (
    AlternatingWord, ake, ake_representation, alternating_basis, degraded_pi, pi_q
)
from src.builders.example import HopfExample
from src.builders.group_hopf import (
    character_rep, character_span_injectivity, character_vectors, cyclic_rep, evaluation_rep,
    function_algebra, group_algebra, group_morphism_hopf, is_projective_generating_family,
    linear_characters, representation_comodule, standard_comodule,
    standard_representation_matrices
)
from src.builders.groups import (
    GroupTable, cyclic_group_table, dihedral_group_table, find_element, group_from_name,
    make_group_table, product_group_table, symmetric_group_table
)
from src.builders.taft import random_taft_representation, taft, taft_representation
