"""Exact minimum-edge search.

An optimal graph is a disjoint union of connected graphs, each of which is
optimal among connected graphs of its order (otherwise swapping it out
saves an edge).  So the search computes, for every component order ``s``
that can occur, the minimum size ``c(s)`` of a connected feasible graph, but
only when that can beat or tie the best split of ``s`` into smaller
components.  The answer for ``n`` is then the best partition of ``n``.

Connected graphs are found by branch-and-bound over adjacency rows: row
``i`` fixes the neighbours of vertex ``i`` among higher labels.  Vertices
above ``i`` that look identical to all fixed rows are interchangeable, so
only prefixes of each such class are tried.  Vertex 0 has maximum degree.
Surviving leaves are reduced to isomorphism classes.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product

from ..graph import Graph, disjoint_union, members
from ..iso import IsoClasses
from .problem import SearchProblem, SearchResult, as_fraction, is_feasible, min_degree

DEFAULT_CERT_CAP = 14
MAX_WITNESSES = 100


class BudgetExhausted(Exception):
    pass


def connected_lower_bound(s: int, t) -> int:
    """Edge lower bound for a connected feasible graph on ``s`` vertices.

    With integer ``t`` a graph whose degrees all equal ``t`` must have
    complete neighbourhoods, so it is a union of ``K_{t+1}``; a connected
    one of any other order needs a vertex of higher degree.
    """
    d = min_degree(t)
    exact_clique = as_fraction(t).denominator == 1
    if exact_clique and s != d + 1:
        return s * d // 2 + 1
    return math.ceil(s * d / 2)


def _pairs(k: int) -> int:
    return k * (k - 1) // 2


class _LayerSearch:
    """All connected feasible graphs on ``s`` vertices with exactly ``m``
    edges, below a fixed degree of vertex 0."""

    def __init__(self, s: int, m: int, d: int, req: int, budget: int | None):
        self.s, self.m, self.d, self.req = s, m, d, req
        self.budget = budget
        self.nodes = 0
        self.full = (1 << s) - 1
        self.leaves: list[Graph] = []

    def run(self, deg0: int) -> None:
        s = self.s
        rows = [0] * s
        rows[0] = ((1 << (deg0 + 1)) - 1) & ~1
        for v in range(1, deg0 + 1):
            rows[v] = 1
        self._row(1, rows, deg0, deg0)

    def _tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted

    def _row(self, i: int, rows: list[int], deg0: int, edges: int) -> None:
        self._tick()
        s, d, m = self.s, self.d, self.m
        if i >= s - 1:
            if edges == m:
                g = Graph._trusted(s, tuple(rows))
                if g.is_connected() and g.min_triangle_degree() >= self.req:
                    self.leaves.append(g)
            return
        cur = rows[i].bit_count()
        high = self.full & ~((1 << (i + 1)) - 1)
        groups: dict[int, list[int]] = {}
        for v in members(high):
            groups.setdefault(rows[v], []).append(v)
        classes = list(groups.values())
        kmin = max(0, d - cur)
        kmax = min(deg0 - cur, m - edges, (s - 1 - i))
        if kmin > kmax:
            return
        for counts in product(*(range(len(c) + 1) for c in classes)):
            k = sum(counts)
            if k < kmin or k > kmax:
                continue
            chosen = 0
            for c, cnt in zip(classes, counts):
                for v in c[:cnt]:
                    chosen |= 1 << v
            new = list(rows)
            new[i] |= chosen
            for v in members(chosen):
                new[v] |= 1 << i
            if self._viable(i, new, deg0, edges + k):
                self._row(i + 1, new, deg0, edges + k)

    def _viable(self, i: int, rows: list[int], deg0: int, edges: int) -> bool:
        s, d, req = self.s, self.d, self.req
        high = self.full & ~((1 << (i + 1)) - 1)
        n_high = s - i - 1
        left = self.m - edges
        if left < 0 or left > _pairs(n_high):
            return False
        deficit = 0
        slack = 0
        for v in members(high):
            dv = rows[v].bit_count()
            if dv > deg0 or dv + n_high - 1 < d:
                return False
            deficit += max(0, d - dv)
            slack += min(deg0 - dv, n_high - 1)
        if deficit > 2 * left or slack < 2 * left:
            return False

        # closed vertices: pairs touching a closed vertex are final
        check = (rows[i] & ~high) | (1 << i)
        for v in members(check):
            nv = rows[v]
            hi = nv & high
            lo = nv ^ hi
            inner = cross = 0
            for a in members(lo):
                inner += (rows[a] & lo).bit_count()
                cross += (rows[a] & hi).bit_count()
            if inner // 2 + cross + _pairs(hi.bit_count()) < req:
                return False

        # open vertices: everything still missing could still appear
        for v in members(high):
            k = rows[v]
            room = deg0 - k.bit_count()
            inner = 0
            for a in members(k):
                inner += (rows[a] & k).bit_count()
            inner //= 2
            if room <= 0:
                if inner < req:
                    return False
                continue
            gains = sorted(((rows[f] & k).bit_count() for f in members(high & ~(1 << v))), reverse=True)
            take = min(room, len(gains))
            if inner + sum(gains[:take]) + _pairs(take) < req:
                return False

        # a closed set with no edge to the open part is cut off for good
        if high:
            seen = 1
            frontier = 1
            while frontier:
                nxt = 0
                for v in members(frontier):
                    nxt |= rows[v]
                frontier = nxt & ~seen
                seen |= nxt
            if not seen & high and seen != self.full:
                return False
            closed = self.full & ~high
            rest = closed & ~seen
            while rest:
                comp = rest & -rest
                frontier = comp
                while frontier:
                    nxt = 0
                    for v in members(frontier):
                        nxt |= rows[v]
                    frontier = nxt & ~comp
                    comp |= nxt
                if not comp & high:
                    return False
                rest &= ~comp
        return True


def _run_subtree(args) -> tuple[list[tuple[int, ...]], int, bool]:
    s, m, d, req, budget, deg0 = args
    job = _LayerSearch(s, m, d, req, budget)
    exhausted = False
    try:
        job.run(deg0)
    except BudgetExhausted:
        exhausted = True
    classes = IsoClasses()
    for g in job.leaves:
        classes.add(g)
    return [g.adj for g in classes.representatives], job.nodes, exhausted


@dataclass
class _Budget:
    limit: int | None
    used: int = 0

    def remaining(self) -> int | None:
        return None if self.limit is None else max(0, self.limit - self.used)


def _search_layer(s: int, m: int, t, budget: _Budget, workers: int) -> tuple[list[Graph], bool]:
    """Isomorphism classes of connected feasible graphs with ``m`` edges on
    ``s`` vertices; the flag reports budget exhaustion."""
    d = min_degree(t)
    req = math.ceil(as_fraction(t) * (as_fraction(t) - 1) / 2)
    top = min(s - 1, m)
    jobs = [(s, m, d, req, None, deg0) for deg0 in range(top, max(d, 1) - 1, -1)]
    results = []
    exhausted = False
    if workers > 1 and len(jobs) > 1:
        rem = budget.remaining()
        jobs = [j[:4] + (rem,) + j[5:] for j in jobs]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_subtree, jobs))
        budget.used += sum(r[1] for r in results)
        exhausted = any(r[2] for r in results) or (budget.limit is not None and budget.used > budget.limit)
    else:
        for j in jobs:
            r = _run_subtree(j[:4] + (budget.remaining(),) + j[5:])
            budget.used += r[1]
            results.append(r)
            if r[2]:
                exhausted = True
                break
    merged = IsoClasses()
    for adjs, _, _ in results:
        for adj in adjs:
            merged.add(Graph._trusted(s, adj))
    return list(merged.representatives), exhausted


@dataclass
class ComponentOptimum:
    """Best connected graphs of one order, when they can matter."""

    size: int
    edges: int | None             # None: no connected graph ties or beats a split
    reps: list[Graph] = field(default_factory=list)
    nodes: int = 0
    certified: bool = True


_MEMO: dict[tuple[int, Fraction, int | None], ComponentOptimum] = {}


def _component_optimum(s: int, t, split: int | None, budget: _Budget, workers: int,
                       cert_cap: int) -> ComponentOptimum:
    key = (s, as_fraction(t), split)
    hit = _MEMO.get(key)
    if hit is not None:
        budget.used += hit.nodes
        return hit
    lb = connected_lower_bound(s, t)
    ub = split if split is not None else _pairs(s)
    if lb > ub:
        res = ComponentOptimum(s, None)
        _MEMO[key] = res
        return res
    if s > cert_cap:
        if split is not None:
            return ComponentOptimum(s, None, certified=False)
        return ComponentOptimum(s, _pairs(s), [Graph.complete(s)], certified=False)
    start = budget.used
    for m in range(lb, ub + 1):
        reps, exhausted = _search_layer(s, m, t, budget, workers)
        if exhausted:
            if reps:
                return ComponentOptimum(s, m, reps, budget.used - start, certified=False)
            if split is None:
                return ComponentOptimum(s, _pairs(s), [Graph.complete(s)], budget.used - start, False)
            return ComponentOptimum(s, None, [], budget.used - start, False)
        if reps:
            res = ComponentOptimum(s, m, reps, budget.used - start)
            _MEMO[key] = res
            return res
    res = ComponentOptimum(s, None, [], budget.used - start)
    _MEMO[key] = res
    return res


def _partitions(n: int, low: int, high: int | None = None):
    """Non-increasing partitions of ``n`` into parts in ``[low, high]``."""
    if high is None:
        high = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, high), low - 1, -1):
        for rest in _partitions(n - p, low, p):
            yield (p,) + rest


def min_edges_exact(p: SearchProblem, budget: int | None = None, workers: int = 1,
                    cert_cap: int = DEFAULT_CERT_CAP) -> SearchResult:
    """Minimum number of edges of a graph on ``p.n`` vertices in which every
    vertex lies in at least ``C(t,2)`` triangles, with witnesses.

    ``budget`` caps the number of search nodes; running out gives a result
    flagged as not certified.  Component orders above ``cert_cap`` are not
    searched at all.
    """
    n, t = p.n, p.t
    if not p.feasible:
        return SearchResult(p, None, [], 0, "exact", True, 0, [], None)
    d = p.min_degree
    bud = _Budget(budget)
    sizes = [s for s in range(d + 1, n + 1) if n - s == 0 or n - s >= d + 1]
    comp: dict[int, ComponentOptimum] = {}
    best: dict[int, int] = {}
    certified = True
    for s in sizes:
        split = None
        for a in range(d + 1, s // 2 + 1):
            b = s - a
            if a in best and b in best:
                v = best[a] + best[b]
                split = v if split is None else min(split, v)
        co = _component_optimum(s, t, split, bud, workers, cert_cap)
        certified &= co.certified
        comp[s] = co
        cands = [v for v in (co.edges, split) if v is not None]
        if cands:
            best[s] = min(cands)

    total = best[n]
    parts_ok = [q for q in _partitions(n, d + 1) if all(comp[s].edges is not None for s in q)
                and sum(comp[s].edges for s in q) == total]
    parts_ok.sort(key=lambda q: tuple(sorted(q)))
    witnesses: list[Graph] = []
    count = 0
    for q in parts_ok:
        sizes_in = sorted(set(q))
        choice_lists = []
        for s in sizes_in:
            k = q.count(s)
            choice_lists.append(list(combinations_with_replacement(range(len(comp[s].reps)), k)))
        count += math.prod(len(c) for c in choice_lists)
        if len(witnesses) >= MAX_WITNESSES:
            continue
        for pick in product(*choice_lists):
            parts = []
            for s, idxs in zip(sizes_in, pick):
                parts.extend(comp[s].reps[j] for j in idxs)
            witnesses.append(disjoint_union(*parts))
            if len(witnesses) >= MAX_WITNESSES:
                break

    iso_size = d + 1
    clique_only = iso_size in comp and comp[iso_size].edges == _pairs(iso_size)
    all_iso = bool(parts_ok) and clique_only and all(iso_size in q for q in parts_ok)
    for g in witnesses:
        assert is_feasible(g, t) and g.edge_count() == total
    return SearchResult(p, total, witnesses, bud.used, "exact" if certified else "not-certified",
                        certified, count, parts_ok, all_iso)


def clear_memo() -> None:
    _MEMO.clear()
