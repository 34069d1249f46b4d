"""Shadows of 3-uniform families against the real-argument binomial bound.

For m triples, write m = C(x, 3) with real x >= 3; the pairs covered by the
triples number at least C(x, 2).  Initial colex segments give the smallest
possible shadow, so they show how close the bound is.

Run with ``python3 demos/shadow_bounds.py``.
"""

import random
from itertools import combinations

from kkmin.shadow import KFamily, colex_segment, lovasz_shadow_bound, shadow

print("  m  colex shadow  bound")
for m in (1, 2, 3, 4, 5, 10, 11, 20, 35, 36, 56, 84):
    fam = colex_segment(m, 3)
    print(f"{m:3d}  {len(shadow(fam, 2)):12d}  {lovasz_shadow_bound(m, 3, 2):.4f}")

rng = random.Random(0)
triples = list(combinations(range(9), 3))
gaps = []
for _ in range(2000):
    fam = KFamily.from_sets(3, rng.sample(triples, rng.randint(1, 40)), universe_n=9)
    gaps.append(len(shadow(fam, 2)) - lovasz_shadow_bound(len(fam), 3, 2))
print(f"\n2000 random families on 9 points: smallest gap {min(gaps):.4f}, mean gap {sum(gaps) / len(gaps):.2f}")
