"""Exact maximum t-intersecting families via maximum clique search."""
from ._backend import BACKEND
from .clique import SearchResult, all_maximum_cliques, max_clique
from .graph import BitGraph, IntersectionGraph, build_graph
from .theorem import TheoremReport, ThresholdReport, find_n0, verify_theorem

__all__ = [
    "BACKEND",
    "BitGraph",
    "IntersectionGraph",
    "SearchResult",
    "TheoremReport",
    "ThresholdReport",
    "all_maximum_cliques",
    "build_graph",
    "find_n0",
    "max_clique",
    "verify_theorem",
]
