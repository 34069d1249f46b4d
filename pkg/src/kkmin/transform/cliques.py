from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..graph import Graph, mask_of


class PreconditionError(ValueError):
    """A construction was asked to run outside its hypotheses."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        self.detail = detail
        super().__init__(f"{condition}: {detail}" if detail else condition)


@dataclass(frozen=True)
class CliqueFamily:
    """Ordered, pairwise disjoint (t+1)-sets; each clique keeps its given vertex order."""

    t: int
    cliques: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = 0
        for c in self.cliques:
            if len(c) != self.t + 1 or len(set(c)) != len(c):
                raise PreconditionError("clique size", f"{c} is not a set of {self.t + 1} vertices")
            m = mask_of(c)
            if m & seen:
                raise PreconditionError("pairwise disjoint", f"{c} overlaps an earlier clique")
            seen |= m

    @classmethod
    def of(cls, cliques: Iterable[Iterable[int]], t: int | None = None) -> "CliqueFamily":
        cl = tuple(tuple(c) for c in cliques)
        if t is None:
            if not cl:
                raise ValueError("cannot infer t from an empty family")
            t = len(cl[0]) - 1
        return cls(t, cl)

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    @property
    def vertex_mask(self) -> int:
        return mask_of(v for c in self.cliques for v in c)

    def masks(self) -> list[int]:
        return [mask_of(c) for c in self.cliques]

    def validate_in(self, g: Graph, *, no_cross_edges: bool = True, external_neighbors: bool = False) -> None:
        masks = self.masks()
        for c, m in zip(self.cliques, masks):
            if any(v >= g.n for v in c):
                raise PreconditionError("vertex range", f"{c} not inside 0..{g.n - 1}")
            if not g.is_clique(m):
                raise PreconditionError("clique", f"{c} does not induce K_{self.t + 1}")
        if no_cross_edges:
            full = self.vertex_mask
            for c, m in zip(self.cliques, masks):
                if g.neighborhood_of_set(m) & full & ~m:
                    raise PreconditionError("no cross edges", f"{c} is adjacent to another clique")
        if external_neighbors:
            for c, m in zip(self.cliques, masks):
                if not g.neighborhood_of_set(m) & ~m:
                    raise PreconditionError("external neighbour", f"{c} is an isolated clique")
