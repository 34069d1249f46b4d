"""How few edges can a graph have if every vertex sits in C(t,2) triangles?

Walks through the exact search for t = 2, 3, 4, printing the optimum next to
the degree lower bound ceil(n t / 2) and describing what the optimal graphs
look like.  Run with ``python3 demos/exact_minimum_table.py``.
"""

import math

from kkmin.search import SearchProblem, min_edges_exact


def describe(g):
    parts = []
    for comp in g.components():
        h = g.induced_subgraph(comp)
        k = len(comp)
        parts.append(f"K{k}" if h.edge_count() == k * (k - 1) // 2 else f"[{k}v,{h.edge_count()}e]")
    return " + ".join(sorted(parts))


for t in (2, 3, 4):
    print(f"t = {t}: every vertex needs {math.comb(t, 2)} triangles, so degree >= {t}")
    print("   n  min  ceil(nt/2)  witnesses")
    for n in range(t + 1, 13):
        res = min_edges_exact(SearchProblem(n, t))
        shapes = ", ".join(describe(w) for w in res.witnesses[:3])
        print(f"  {n:2d}  {res.min_edges:3d}  {math.ceil(n * t / 2):10d}  {shapes}")
    print()

# With t = 2 the optimum always keeps a separate triangle once n is large
# enough.  The search reports the smallest n from which every optimal graph
# does so, as plain data.
flags = {n: min_edges_exact(SearchProblem(n, 2)).all_have_isolated_clique for n in range(3, 13)}
print("t = 2, every optimum contains a separate triangle:", flags)
start = min(n for n in flags if all(flags[m] for m in flags if m >= n))
print(f"smallest n with that property from there on (up to 12): {start}")
