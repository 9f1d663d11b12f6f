"""Closed-form b* and z values for structured graph classes, with witnesses."""

from .blocks import (
    ClassResult,
    bstar_block,
    bstar_cactus,
    extend_coloring,
    find_bstar_witness,
    is_block_graph,
    is_cactus,
    is_forest,
)
from .girth5 import AmArray, Girth5Witness, build_array, bstar_girth5, format_array, girth5_bstar_witness
from .p4sparse import (
    DecompNode,
    bstar_p4sparse,
    decompose_p4sparse,
    induced_p4s,
    is_cograph,
    is_p4_sparse,
    omega_from_tree,
    optimal_coloring,
    p4_sparse_violation,
)
from .classify import class_tags, classify

__all__ = [
    "AmArray",
    "ClassResult",
    "DecompNode",
    "Girth5Witness",
    "bstar_block",
    "bstar_cactus",
    "bstar_girth5",
    "bstar_p4sparse",
    "build_array",
    "class_tags",
    "classify",
    "decompose_p4sparse",
    "extend_coloring",
    "find_bstar_witness",
    "format_array",
    "girth5_bstar_witness",
    "induced_p4s",
    "is_block_graph",
    "is_cactus",
    "is_cograph",
    "is_forest",
    "is_p4_sparse",
    "omega_from_tree",
    "optimal_coloring",
    "p4_sparse_violation",
]
