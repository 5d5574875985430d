"""Alternating sign matrices, Bruhat order and the lattices ASM^I(n)."""

from .asm import (
    Asm,
    MonotoneTriangle,
    ParabolicMask,
    Permutation,
    RankMatrix,
    asm_as_permutation,
    asm_count,
    asm_from_rank_matrix,
    asm_to_monotone_triangle,
    enumerate_asms,
    identity_asm,
    monotone_triangle_to_asm,
    permutation_to_asm,
    rank_matrix,
    validate_asm,
)
from .bruhat import bigrassmannian_p, bigrassmannian_q, bruhat_leq, hasse_covers, join, meet
from .completion import FinitePoset, dm_completion, find_isomorphism, poset_isomorphic
from .enumeration import alpha_operator, alpha_recursive, count_tail_family
from .errors import AsmLatticeError, ResourceLimit
from .parabolic import enumerate_asm_i, in_asm_i, join_I, leq_I, meet_I, quotient
from .pi import pi_i, pi_parabolic, pi_word
from .sixvertex import SixVertexState, asm_to_state, in_st_i, state_to_asm
from .variety import RationalMatrix, column_witness, exact_rank, in_asm_variety

__version__ = "0.1.0"

__all__ = [
    "Asm",
    "AsmLatticeError",
    "FinitePoset",
    "MonotoneTriangle",
    "ParabolicMask",
    "Permutation",
    "RankMatrix",
    "RationalMatrix",
    "ResourceLimit",
    "SixVertexState",
    "alpha_operator",
    "alpha_recursive",
    "asm_as_permutation",
    "asm_count",
    "asm_from_rank_matrix",
    "asm_to_monotone_triangle",
    "asm_to_state",
    "bigrassmannian_p",
    "bigrassmannian_q",
    "bruhat_leq",
    "column_witness",
    "count_tail_family",
    "dm_completion",
    "enumerate_asm_i",
    "enumerate_asms",
    "exact_rank",
    "find_isomorphism",
    "hasse_covers",
    "identity_asm",
    "in_asm_i",
    "in_asm_variety",
    "in_st_i",
    "join",
    "join_I",
    "leq_I",
    "meet",
    "meet_I",
    "monotone_triangle_to_asm",
    "permutation_to_asm",
    "pi_i",
    "pi_parabolic",
    "pi_word",
    "poset_isomorphic",
    "quotient",
    "rank_matrix",
    "state_to_asm",
    "validate_asm",
]
