"""Exhaustive brute-force oracle for tiny orders.

Every labelled graph is an integer mask over the ``C(n,2)`` vertex pairs.
Masks of a fixed edge count are produced by pairing low and high halves of
the pair list grouped by popcount, then filtered with vectorized degree and
per-vertex triangle tests.  No pruning beyond that, so it shares nothing
with the branch-and-bound search.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from ..graph import Graph
from ..iso import IsoClasses
from .problem import SearchProblem, SearchResult

MAX_ORDER = 8
_CHUNK = 1 << 22


def _half_masks(bits: int) -> list[np.ndarray]:
    """All values below ``2**bits`` bucketed by popcount."""
    vals = np.arange(1 << bits, dtype=np.uint32)
    pc = np.bitwise_count(vals)
    return [vals[pc == k] for k in range(bits + 1)]


def _layer(n: int, m: int, low: list[np.ndarray], high: list[np.ndarray], lbits: int):
    """Yield chunks of all masks with exactly ``m`` set bits."""
    for kl in range(len(low)):
        kh = m - kl
        if not 0 <= kh < len(high):
            continue
        lo, hi = low[kl], high[kh]
        if not lo.size or not hi.size:
            continue
        step = max(1, _CHUNK // lo.size)
        for s in range(0, hi.size, step):
            block = (hi[s:s + step, None] << np.uint32(lbits)) | lo[None, :]
            yield block.ravel()


def brute_force_oracle(p: SearchProblem) -> SearchResult:
    n = p.n
    if n > MAX_ORDER:
        raise ValueError(f"oracle handles n <= {MAX_ORDER}, got {n}")
    if not p.feasible:
        return SearchResult(p, None, [], 0, "exact", True, 0)
    pairs = list(combinations(range(n), 2))
    bit = {pr: i for i, pr in enumerate(pairs)}
    total = len(pairs)
    lbits = total // 2
    low, high = _half_masks(lbits), _half_masks(total - lbits)

    inc = []
    for v in range(n):
        mk = 0
        for u in range(n):
            if u != v:
                mk |= 1 << bit[(min(u, v), max(u, v))]
        inc.append(np.uint32(mk))
    tri_masks = []
    for v in range(n):
        ms = []
        for a, b in combinations([u for u in range(n) if u != v], 2):
            ms.append((1 << bit[(min(v, a), max(v, a))]) | (1 << bit[(min(v, b), max(v, b))])
                      | (1 << bit[(a, b)]))
        tri_masks.append(np.array(ms, dtype=np.uint32))

    d, req = p.min_degree, p.required
    explored = 0
    for m in range(math.ceil(n * d / 2), total + 1):
        hits = []
        for block in _layer(n, m, low, high, lbits):
            explored += block.size
            keep = np.ones(block.size, dtype=bool)
            for v in range(n):
                keep &= np.bitwise_count(block & inc[v]) >= d
            block = block[keep]
            for v in range(n):
                if not block.size:
                    break
                cnt = np.zeros(block.size, dtype=np.int32)
                for tm in tri_masks[v]:
                    cnt += (block & tm) == tm
                block = block[cnt >= req]
            if block.size:
                hits.append(block)
        if hits:
            classes = IsoClasses()
            for mask in np.concatenate(hits).tolist():
                classes.add(Graph.from_edges(n, [pr for i, pr in enumerate(pairs) if mask >> i & 1]))
            reps = classes.representatives
            return SearchResult(p, m, reps[:100], explored, "exact", True, len(reps))
    raise AssertionError("the complete graph is always feasible here")
