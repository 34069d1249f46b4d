"""Problem and result records for minimum-edge search."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..graph import Graph
from ..graph6 import to_graph6


def as_fraction(t) -> Fraction:
    """Exact value of ``t``; floats go through their shortest decimal repr."""
    if isinstance(t, Fraction):
        return t
    if isinstance(t, int):
        return Fraction(t)
    if isinstance(t, float):
        return Fraction(repr(t))
    return Fraction(str(t))


def t_label(t):
    """JSON-friendly form of ``t``: an int when integral, else a float."""
    f = as_fraction(t)
    return int(f) if f.denominator == 1 else float(f)


def threshold(t) -> Fraction:
    f = as_fraction(t)
    return f * (f - 1) / 2


def min_degree(t) -> int:
    """Smallest degree that leaves room for C(t,2) triangles at a vertex."""
    return math.ceil(as_fraction(t))


@dataclass(frozen=True)
class SearchProblem:
    n: int
    t: object

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if as_fraction(self.t) < 2:
            raise ValueError(f"t must be at least 2, got {self.t}")

    @property
    def threshold(self) -> Fraction:
        return threshold(self.t)

    @property
    def min_degree(self) -> int:
        return min_degree(self.t)

    @property
    def required(self) -> int:
        """Integer form of the threshold: triangle counts are integers."""
        return math.ceil(self.threshold)

    @property
    def feasible(self) -> bool:
        return self.n >= self.min_degree + 1


def is_feasible(g: Graph, t) -> bool:
    """Every vertex lies in at least C(t,2) triangles (exact comparison)."""
    if g.n == 0:
        return False
    return g.min_triangle_degree() >= threshold(t)


@dataclass
class SearchResult:
    problem: SearchProblem
    min_edges: int | None            # None means infeasible
    witnesses: list[Graph] = field(default_factory=list)
    explored_nodes: int = 0
    optimality: str = "exact"        # exact | oracle-confirmed | not-certified
    certified: bool = True
    witness_count: int = 0           # isomorphism classes, possibly more than retained
    partitions: list[tuple[int, ...]] = field(default_factory=list)
    all_have_isolated_clique: bool | None = None

    @property
    def infeasible(self) -> bool:
        return self.min_edges is None and self.certified

    def to_record(self) -> dict:
        return {
            "n": self.problem.n,
            "t": t_label(self.problem.t),
            "min_edges": "infeasible" if self.min_edges is None else self.min_edges,
            "witnesses": [to_graph6(g) for g in self.witnesses],
            "certified": self.certified,
            "nodes": self.explored_nodes,
        }

    def to_json_dict(self) -> dict:
        rec = self.to_record()
        rec.update({
            "optimality": self.optimality,
            "witness_count": self.witness_count,
            "partitions": [list(p) for p in self.partitions],
            "all_have_isolated_clique": self.all_have_isolated_clique,
        })
        return rec
