"""z-colorings and b*-colorings of graphs: bounds, constructive transforms,
exact oracles, closed forms for structured classes and a 0-1 model."""

from .bounds import bounds_report, delta2, m_of, m_star
from .coloring import Coloring, VerifyReport, ZWitness, is_grundy, is_proper, nice_vertices, verify_z
from .graph import Graph, GraphFormatError, parse_dimacs, read_graph, write_dimacs
from .transform import dsatur, greedy, grundyfy, iz, promote_nice_class, z_transform

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "Graph",
    "GraphFormatError",
    "VerifyReport",
    "ZWitness",
    "bounds_report",
    "delta2",
    "dsatur",
    "greedy",
    "grundyfy",
    "is_grundy",
    "is_proper",
    "iz",
    "m_of",
    "m_star",
    "nice_vertices",
    "parse_dimacs",
    "promote_nice_class",
    "read_graph",
    "verify_z",
    "write_dimacs",
    "z_transform",
]
