"""Two graph rewrites on a small random instance.

1. Regularization takes two (t+1)-cliques, cuts the edges between their
   private parts, and pushes each boundary vertex's neighbours into an
   initial segment of the first clique.  The edge count never grows and the
   triangle requirement survives.
2. Peeling repeatedly picks the boundary vertex with the most neighbours in
   the remaining cliques and throws away every clique it touches.

Run with ``python3 demos/regularize_and_peel.py [seed]``.
"""

import random
import sys
from itertools import combinations

from kkmin.graph import Graph
from kkmin.graph6 import to_graph6
from kkmin.transform import (CliqueFamily, b_interval, b_upper_bound, check_regularize_properties, peel,
                             regularize)

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 3
rng = random.Random(seed)
t = 3
cliques = [tuple(range(i * (t + 1), (i + 1) * (t + 1))) for i in range(4)]
inside = 4 * (t + 1)
n = inside + 6
edges = {e for c in cliques for e in combinations(c, 2)}
for u in range(inside, n):
    for v in rng.sample(range(inside), rng.randint(1, 6)):
        edges.add((v, u))
g = Graph.from_edges(n, sorted(edges))
print(f"instance (seed {seed}): {to_graph6(g)}, {g.edge_count()} edges")

# --- regularization on the first two cliques
a1, a2 = cliques[0], cliques[1]
gp = regularize(g, a1, a2)
rep = check_regularize_properties(g, gp, a1, a2)
print(f"\nregularize({a1}, {a2}): edge change {rep.edge_delta}")
for r in rep.results:
    print(f"  {r.name:<22} {'ok' if r.passed else 'FAILED'}")
for u in range(inside, n):
    before = [v for v in g.neighbors(u) if v < 2 * (t + 1)]
    after = [v for v in gp.neighbors(u) if v < 2 * (t + 1)]
    if before != after:
        print(f"  vertex {u}: {before} -> {after}")

# --- peeling the whole family
trace = peel(g, CliqueFamily.of(cliques))
print("\npeeling trace")
print(trace.to_text(), end="")
for i in range(1, trace.xi + 1):
    f = trace.f_sequence[i - 1]
    print(f"  interval from step {i}: length {b_interval(trace, i)}, bound {b_upper_bound(f, t)}")
# a random graph is not optimal, so an interval may exceed its bound; the
# bound is only guaranteed for extremal graphs
