import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from kkmin.graph import Graph


@st.composite
def graphs(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def triple_triangle_degree(g, v):
    """Independent count: scan every triple through v."""
    others = [u for u in range(g.n) if u != v]
    return sum(1 for a, b in combinations(others, 2)
               if g.has_edge(v, a) and g.has_edge(v, b) and g.has_edge(a, b))


def clique_scan(g, size):
    return [c for c in combinations(range(g.n), size)
            if all(g.has_edge(a, b) for a, b in combinations(c, 2))]


def random_clique_instance(rng, n_cliques, t, extra, cross=0, max_attach=None):
    """Disjoint (t+1)-cliques on the low labels plus ``extra`` boundary
    vertices with random attachments (and optional edges among them)."""
    size = t + 1
    inside = n_cliques * size
    n = inside + extra
    cliques = [tuple(range(i * size, (i + 1) * size)) for i in range(n_cliques)]
    edges = {(a, b) for c in cliques for a, b in combinations(c, 2)}
    attach = max_attach or size
    for u in range(inside, n):
        for v in rng.sample(range(inside), rng.randint(1, min(inside, attach))):
            edges.add((v, u))
    for a, b in combinations(range(inside, n), 2):
        if rng.random() < 0.3:
            edges.add((a, b))
    for _ in range(cross):
        a, b = rng.sample(range(inside), 2)
        if a // size != b // size:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, sorted(edges)), cliques


@pytest.fixture
def rng():
    return random.Random(20240601)


# one summary line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
