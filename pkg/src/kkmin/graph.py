"""Simple undirected graphs on vertices ``0..n-1`` with bitset adjacency.

Every adjacency row is a Python ``int`` whose bit ``j`` is set iff ``j`` is a
neighbour.  Triangle degrees are computed edge-wise as popcounts of
``N(a) & N(b)``, which keeps the search layer's inner loop cheap.

Graphs are immutable values: ``add_edge`` and friends return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int] | int) -> int:
    """Bitmask of a vertex collection; an ``int`` is taken to be a mask already."""
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Sorted vertices of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class TriangleBreakdown:
    """Triangles through an anchor vertex, keyed by ``(|T ∩ P|, |T ∩ Q|)``.

    The anchor itself never counts towards either side.
    """

    anchor: int
    counts: dict[tuple[int, int], int]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.counts.get(key, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


class Graph:
    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = tuple(adj) if adj is not None else (0,) * n
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at {u}")
            for v in members(row):
                if not rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = rows
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"self-loop at {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls._trusted(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls._trusted(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._trusted(n, (0,) * n)

    # -- value semantics --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"

    # -- basic accessors --------------------------------------------------

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range 0..{self.n - 1}")

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for a, row in enumerate(self.adj):
            for b in members(row >> (a + 1)):
                yield a, a + 1 + b

    def has_edge(self, a: int, b: int) -> bool:
        self._check(a)
        self._check(b)
        return bool(self.adj[a] >> b & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return members(self.adj[v])

    def neighborhood_of_set(self, vertices: Iterable[int] | int) -> int:
        """Union of the neighbourhoods of ``vertices``, as a bitmask."""
        out = 0
        for v in members(mask_of(vertices)):
            self._check(v)
            out |= self.adj[v]
        return out

    def add_edge(self, a: int, b: int) -> "Graph":
        self._check(a)
        self._check(b)
        if a == b:
            raise ValueError(f"self-loop at {a}")
        rows = list(self.adj)
        rows[a] |= 1 << b
        rows[b] |= 1 << a
        return Graph._trusted(self.n, tuple(rows))

    def remove_edge(self, a: int, b: int) -> "Graph":
        self._check(a)
        self._check(b)
        rows = list(self.adj)
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        return Graph._trusted(self.n, tuple(rows))

    def induced_subgraph(self, vertices: Iterable[int] | int) -> "Graph":
        """Subgraph on ``vertices``, relabelled ``0..k-1`` in ascending order."""
        keep = members(mask_of(vertices))
        for v in keep:
            self._check(v)
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(mask_of(pos[w] for w in members(self.adj[v]) if w in pos))
        return Graph._trusted(len(keep), tuple(rows))

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            rows[perm[v]] = mask_of(perm[w] for w in members(row))
        return Graph._trusted(self.n, tuple(rows))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    # -- triangles --------------------------------------------------------

    def triangle_degree(self, v: int) -> int:
        """Number of triangles containing ``v``."""
        self._check(v)
        nv = self.adj[v]
        return sum((self.adj[a] & nv).bit_count() for a in members(nv)) // 2

    def triangle_degrees(self) -> list[int]:
        adj = self.adj
        out = []
        for nv in adj:
            s = 0
            rest = nv
            while rest:
                low = rest & -rest
                s += (adj[low.bit_length() - 1] & nv).bit_count()
                rest ^= low
            out.append(s // 2)
        return out

    def min_triangle_degree(self) -> int:
        # empty graph: 0 by convention
        return min(self.triangle_degrees(), default=0)

    def triangle_count(self) -> int:
        return sum(self.triangle_degrees()) // 3

    def triangle_breakdown(self, v: int, p: Iterable[int] | int, q: Iterable[int] | int) -> TriangleBreakdown:
        """Classify the triangles through ``v`` by how many of their other two
        vertices lie in ``p`` and in ``q``."""
        self._check(v)
        pm, qm = mask_of(p), mask_of(q)
        if pm & qm:
            raise ValueError("p and q must be disjoint")
        if (pm | qm) >> v & 1:
            raise ValueError(f"anchor {v} must lie outside p and q")
        counts: dict[tuple[int, int], int] = {}
        nv = self.adj[v]
        for a in members(nv):
            for b in members(self.adj[a] & nv & ~((1 << (a + 1)) - 1)):
                key = ((pm >> a & 1) + (pm >> b & 1), (qm >> a & 1) + (qm >> b & 1))
                counts[key] = counts.get(key, 0) + 1
        return TriangleBreakdown(v, counts)

    # -- cliques and components ------------------------------------------

    def is_clique(self, vertices: Iterable[int] | int) -> bool:
        m = mask_of(vertices)
        return all((self.adj[v] | (1 << v)) & m == m for v in members(m))

    def find_cliques(self, size: int) -> list[tuple[int, ...]]:
        """All vertex sets of ``size`` inducing a complete graph, in
        lexicographic order of their sorted vertex tuples."""
        if size < 1:
            raise ValueError("clique size must be at least 1")
        out: list[tuple[int, ...]] = []
        adj = self.adj

        def grow(chosen: list[int], cand: int) -> None:
            if len(chosen) == size:
                out.append(tuple(chosen))
                return
            need = size - len(chosen)
            while cand and cand.bit_count() >= need:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                chosen.append(v)
                grow(chosen, cand & adj[v])
                chosen.pop()

        grow([], (1 << self.n) - 1)
        return out

    def components(self) -> list[tuple[int, ...]]:
        """Connected components, ordered by smallest vertex."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in members(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(tuple(members(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def isolated_clique_components(self, size: int) -> list[tuple[int, ...]]:
        """Connected components that are complete graphs on exactly ``size`` vertices."""
        if size < 1:
            raise ValueError("clique size must be at least 1")
        return [c for c in self.components() if len(c) == size and self.is_clique(c)]


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph._trusted(offset, tuple(rows))


def brute_force_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """Every triangle of ``g`` by scanning all triples; a slow reference."""
    return [t for t in combinations(range(g.n), 3)
            if g.has_edge(t[0], t[1]) and g.has_edge(t[0], t[2]) and g.has_edge(t[1], t[2])]
