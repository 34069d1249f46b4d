"""Explicit feasible graphs: disjoint cliques and cliques minus a matching."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..graph import Graph, disjoint_union
from .problem import SearchProblem, as_fraction, is_feasible, threshold


def construct_disjoint_cliques(n: int, t: int) -> Graph:
    """``n/(t+1)`` disjoint copies of ``K_{t+1}``."""
    if t < 1 or n % (t + 1):
        raise ValueError(f"t+1 = {t + 1} must divide n = {n}")
    return disjoint_union(*[Graph.complete(t + 1)] * (n // (t + 1))) if n else Graph.empty(0)


def construct_matched_clique(m: int) -> Graph:
    """``K_{m+2}`` with the perfect matching ``{2i, 2i+1}`` removed."""
    if m < 2 or m % 2:
        raise ValueError(f"m must be an even integer >= 2, got {m}")
    k = m + 2
    return Graph.from_edges(k, [(a, b) for a in range(k) for b in range(a + 1, k)
                                if not (a % 2 == 0 and b == a + 1)])


@dataclass(frozen=True)
class CounterexampleReport:
    t: object
    ceil_t: int
    required: Fraction               # C(t,2)
    available: Fraction              # C(ceil t, 2) - ceil t / 2
    condition_holds: bool
    block: Graph
    block_feasible: bool
    block_has_isolated_clique: bool  # a K_{ceil t + 1} component
    block_edges_per_vertex: Fraction
    cliques_edges_per_vertex: Fraction  # for disjoint K_{ceil t + 1}
    exact_min_edges: int | None = None  # optimum on the block's order, if requested
    exact_all_have_isolated_clique: bool | None = None

    def to_json_dict(self) -> dict:
        return {
            "t": float(as_fraction(self.t)) if as_fraction(self.t).denominator != 1 else int(self.t),
            "ceil_t": self.ceil_t,
            "required": str(self.required),
            "available": str(self.available),
            "condition_holds": self.condition_holds,
            "block_feasible": self.block_feasible,
            "block_has_isolated_clique": self.block_has_isolated_clique,
            "block_edges": self.block.edge_count(),
            "block_edges_per_vertex": str(self.block_edges_per_vertex),
            "cliques_edges_per_vertex": str(self.cliques_edges_per_vertex),
            "exact_min_edges": self.exact_min_edges,
            "exact_all_have_isolated_clique": self.exact_all_have_isolated_clique,
        }


def counterexample_check(t, confirm: bool = False, budget: int | None = None) -> CounterexampleReport:
    """Test whether ``K_{ceil t + 2}`` minus a perfect matching is feasible for ``t``.

    With ``confirm`` the exact search is run on ``ceil t + 2`` vertices too.
    """
    tf = as_fraction(t)
    if tf < 2:
        raise ValueError("t must be at least 2")
    ct = math.ceil(tf)
    if ct % 2:
        raise ValueError(f"ceil(t) = {ct} must be even")
    need = threshold(tf)
    avail = Fraction(math.comb(ct, 2)) - Fraction(ct, 2)
    block = construct_matched_clique(ct)
    feas = is_feasible(block, tf)
    iso = bool(block.isolated_clique_components(ct + 1))
    rep = dict(t=t, ceil_t=ct, required=need, available=avail, condition_holds=need <= avail,
               block=block, block_feasible=feas, block_has_isolated_clique=iso,
               block_edges_per_vertex=Fraction(block.edge_count(), block.n),
               cliques_edges_per_vertex=Fraction(ct, 2))
    if confirm:
        from .exact import min_edges_exact
        res = min_edges_exact(SearchProblem(block.n, t), budget=budget)
        rep.update(exact_min_edges=res.min_edges, exact_all_have_isolated_clique=res.all_have_isolated_clique)
    return CounterexampleReport(**rep)
