"""Non-integer t: an optimal graph without a separate clique.

For t = 3.2 each vertex needs C(3.2, 2) = 3.52, i.e. 4, triangles.  The
octahedron (K6 minus a perfect matching) gives every vertex exactly 4 while
spending the same two edges per vertex as disjoint copies of K5, which
would be the natural guess.  The exact search confirms 12 edges is optimal on
6 vertices, where no K5 fits alongside anything else.

Run with ``python3 demos/fractional_threshold.py``.
"""

from kkmin.search import counterexample_check

for t in (2, 3.2, 3.5, 3.9, 4, 5.1, 5.5, 5.9):
    rep = counterexample_check(t)
    verdict = "holds" if rep.condition_holds else "fails"
    print(f"t = {t:<4}  need {float(rep.required):6.3f}  block gives {float(rep.available):4.1f}  "
          f"-> {verdict}; block feasible: {rep.block_feasible}")

rep = counterexample_check(3.2, confirm=True)
print(f"\nt = 3.2 on {rep.block.n} vertices: exact optimum {rep.exact_min_edges} edges, "
      f"block has {rep.block.edge_count()}; separate K5 in every optimum: {rep.exact_all_have_isolated_clique}")
