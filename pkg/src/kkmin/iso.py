"""Isomorph rejection: refinement invariants bucket graphs, VF2 settles ties."""

from __future__ import annotations

from networkx.algorithms.isomorphism import GraphMatcher

from .graph import Graph, members


def invariant(g: Graph, rounds: int = 3) -> tuple:
    """Isomorphism-invariant fingerprint from iterated colour refinement.

    Initial colours are (degree, triangle degree); each round appends the
    sorted multiset of neighbour colours.
    """
    tri = g.triangle_degrees()
    colours = [(d, t) for d, t in zip(g.degrees(), tri)]
    for _ in range(rounds):
        palette = {c: i for i, c in enumerate(sorted(set(colours)))}
        ids = [palette[c] for c in colours]
        colours = [(ids[v], tuple(sorted(ids[w] for w in members(g.adj[v])))) for v in range(g.n)]
    return (g.n, g.edge_count(), tuple(sorted(colours)))


class IsoClasses:
    """Keeps one representative per isomorphism class, in insertion order."""

    def __init__(self):
        self._buckets: dict[tuple, list] = {}
        self.representatives: list[Graph] = []

    def __len__(self):
        return len(self.representatives)

    def add(self, g: Graph) -> bool:
        """Insert ``g``; return True if it opened a new class."""
        key = invariant(g)
        bucket = self._buckets.setdefault(key, [])
        if bucket:
            ng = g.to_networkx()
            for other in bucket:
                if GraphMatcher(ng, other).is_isomorphic():
                    return False
            bucket.append(ng)
        else:
            bucket.append(g.to_networkx())
        self.representatives.append(g)
        return True


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if invariant(g) != invariant(h):
        return False
    return GraphMatcher(g.to_networkx(), h.to_networkx()).is_isomorphic()
