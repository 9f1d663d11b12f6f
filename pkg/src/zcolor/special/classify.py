"""Pick the structured-class solver that applies to a graph."""

from __future__ import annotations

from ..graph import Graph, five_cycle_condition, girth
from .blocks import ClassResult, bstar_block, bstar_cactus, is_block_graph, is_cactus, is_forest
from .girth5 import bstar_girth5
from .p4sparse import bstar_p4sparse, is_cograph, is_p4_sparse


def class_tags(g: Graph) -> list[str]:
    """Every recognised class the graph belongs to."""
    tags = []
    if is_forest(g):
        tags.append("tree")
    if is_block_graph(g):
        tags.append("block")
    if is_cactus(g):
        tags.append("cactus")
    if is_cograph(g):
        tags.append("cograph")
    if is_p4_sparse(g):
        tags.append("p4sparse")
    if girth(g) >= 5 and five_cycle_condition(g):
        tags.append("girth5")
    return tags


def classify(g: Graph) -> ClassResult | None:
    """Result of the most specific solver that applies, or None.

    Exact solvers (block graphs, P4-sparse, cacti) are tried before the
    girth-5 lower bound.
    """
    tags = class_tags(g)
    if "block" in tags:
        return bstar_block(g)
    if "p4sparse" in tags:
        return bstar_p4sparse(g)
    if "cactus" in tags:
        return bstar_cactus(g)
    if "girth5" in tags:
        return bstar_girth5(g)
    return None
