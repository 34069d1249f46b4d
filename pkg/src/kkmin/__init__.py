"""Minimum-degree shadow bounds and triangle-degree extremal graphs (k = 3)."""

from .graph import Graph, TriangleBreakdown, disjoint_union
from .graph6 import from_graph6, read_graph, to_graph6
from .shadow import (KFamily, binomial_inverse, colex_segment, family_to_link_graph, gen_binomial,
                     lovasz_shadow_bound, shadow)

__all__ = [
    "Graph", "TriangleBreakdown", "disjoint_union", "from_graph6", "read_graph", "to_graph6",
    "KFamily", "binomial_inverse", "colex_segment", "family_to_link_graph", "gen_binomial",
    "lovasz_shadow_bound", "shadow",
]
