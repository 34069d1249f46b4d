"""Edge-saving rewrites around a peeled clique family.

``greedy_independent_set`` picks far-apart boundary vertices, ``build_J``
turns them into a clique while concentrating the rest of the boundary onto
one clique, and ``build_Lprime`` handles the single-neighbour configuration.
Both builders refuse inputs outside their hypotheses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..graph import Graph, mask_of, members
from .cliques import CliqueFamily, PreconditionError
from .peeling import ALPHA, PeelingTrace


@dataclass(frozen=True)
class GreedyResult:
    vertices: tuple[int, ...]
    target: int
    reached: bool


def greedy_independent_set(g: Graph, trace: PeelingTrace, target: int | None = None,
                           b: int | None = None) -> GreedyResult:
    """Independent set in U_1..U_b: one Z vertex per class that has one,
    then greedily from the remaining classes in order of size."""
    if target is None:
        target = math.ceil(2 * ALPHA * trace.lam) + 2
    if not trace.steps:
        return GreedyResult((), target, target <= 0)
    zp = trace.z_partition(b)
    zset = set(zp.z)
    chosen = []
    for idx in zp.u2:
        chosen.append(min(v for v in trace.step(idx).klass if v in zset))
    if len(chosen) >= target:
        chosen = chosen[:target]
        return GreedyResult(tuple(chosen), target, True)

    classes = sorted(zp.u1, key=lambda i: (trace.step(i).size, i))
    v_masks = [mask_of(trace.step(i).klass) for i in classes]
    rest = 0
    for m in v_masks:
        rest |= m
    while rest and len(chosen) < target:
        ell = next(j for j, m in enumerate(v_masks) if m & rest)
        v = members(v_masks[ell] & rest)[0]
        chosen.append(v)
        rest &= ~(v_masks[ell] | g.adj[v])
    return GreedyResult(tuple(chosen), target, len(chosen) >= target)


@dataclass(frozen=True)
class JResult:
    graph: Graph
    x: tuple[int, ...]          # y_1..y_x
    w_order: tuple[int, ...]    # y_1..y_{x+t+1}
    edge_delta: int
    predicted_delta: int        # C(x,2) - sum f_1(y_j)


def build_J(g: Graph, x0: Sequence[int], d: CliqueFamily, lam: int) -> JResult:
    """Make X a clique cut off from the family, isolate every clique but the
    first, and move each remaining boundary vertex's family edges onto the
    smallest vertices of X followed by the first clique."""
    d.validate_in(g, no_cross_edges=True)
    if not d.cliques:
        raise PreconditionError("clique family", "at least one clique is required")
    x0 = list(x0)
    vd = d.vertex_mask
    m0 = mask_of(x0)
    if len(set(x0)) != len(x0) or any(v >= g.n for v in x0):
        raise PreconditionError("vertex set", "x0 must list distinct vertices of g")
    if m0 & vd:
        raise PreconditionError("disjoint from family", "x0 meets a clique of the family")
    if any(g.adj[v] & m0 for v in x0):
        raise PreconditionError("independent", "x0 is not an independent set")
    b1 = g.neighborhood_of_set(vd) & ~vd
    if m0 & ~b1:
        raise PreconditionError("boundary", "x0 must lie in the boundary of the family")

    x = len(x0) - 1 if lam == 2 else len(x0)
    xs = x0[:max(x, 0)]
    xm = mask_of(xs)
    w_order = xs + list(d.cliques[0])
    f1 = {v: (g.adj[v] & vd).bit_count() for v in members(b1)}

    rows = list(g.adj)

    def cut(a: int, bmask: int):
        for v in members(a):
            rows[v] &= ~bmask
        for v in members(bmask):
            rows[v] &= ~a

    # (i) X becomes a clique with no edges into the family
    for v in xs:
        rows[v] |= xm & ~(1 << v)
    cut(xm, vd)
    # (ii) every clique after the first is isolated
    for c in d.masks()[1:]:
        cut(c, ~c & ((1 << g.n) - 1))
    # (iii) concentrate the rest of the boundary onto W
    wm = mask_of(w_order)
    for v in members(b1 & ~xm):
        keep = g.adj[v] & xm
        free = [w for w in w_order if not keep >> w & 1]
        if f1[v] > len(free):
            raise PreconditionError("room in W", f"vertex {v} needs {f1[v]} slots, W offers {len(free)}")
        new = keep | mask_of(free[:f1[v]])
        cut(1 << v, (wm | vd) & ~new)
        for w in members(new):
            rows[v] |= 1 << w
            rows[w] |= 1 << v
    j = Graph._trusted(g.n, tuple(rows))
    predicted = math.comb(x, 2) - sum(f1[y] for y in xs)
    return JResult(j, tuple(xs), tuple(w_order), j.edge_count() - g.edge_count(), predicted)


@dataclass(frozen=True)
class SingleNeighbourStructure:
    """Per clique i: its attachment vertex z_i, the outside set W_i and the
    edge count e_i inside W_i."""

    z: tuple[int, ...]
    w: tuple[tuple[int, ...], ...]
    e: tuple[int, ...]


def lambda_one_structure(g: Graph, d: CliqueFamily) -> SingleNeighbourStructure | None:
    """Return the structure when every outside vertex has at most one
    neighbour in the family and each clique attaches through one vertex;
    otherwise None."""
    vd = d.vertex_mask
    for v in members(((1 << g.n) - 1) & ~vd):
        if (g.adj[v] & vd).bit_count() > 1:
            return None
    zs, ws, es = [], [], []
    for c in d.masks():
        outside = [v for v in members(c) if g.adj[v] & ~vd]
        if len(outside) != 1:
            return None
        z = outside[0]
        w = g.adj[z] & ~vd
        zs.append(z)
        ws.append(tuple(members(w)))
        es.append(sum((g.adj[u] & w).bit_count() for u in members(w)) // 2)
    return SingleNeighbourStructure(tuple(zs), tuple(ws), tuple(es))


@dataclass(frozen=True)
class LPrimeResult:
    graph: Graph
    edge_delta: int
    predicted_delta: int        # -1 - |N(w1) & W_d|


def build_Lprime(l: Graph, d: CliqueFamily, w_sets: Sequence[Sequence[int]], z_verts: Sequence[int],
                 w1: int, a: int | None = None) -> LPrimeResult:
    """Rewrite the single-neighbour configuration so that one edge at ``w1``
    and every attachment of the cliques after the first are traded for
    edges inside the outside sets.

    ``w_sets[0]`` lists W_1 with ``w1`` taken as its first member and the
    remaining members paired, in order, with W_2, W_3, ...; the last set is
    the one ``w1`` is completed to.
    """
    d.validate_in(l, no_cross_edges=True)
    nd = len(d)
    if nd < 2:
        raise PreconditionError("family size", "at least two cliques are required")
    if len(w_sets) != nd or len(z_verts) != nd:
        raise PreconditionError("configuration", "need one W set and one z vertex per clique")
    st = lambda_one_structure(l, d)
    if st is None:
        raise PreconditionError("single neighbour",
                                "some outside vertex has two family neighbours or a clique attaches through two vertices")
    for i in range(nd):
        if z_verts[i] != st.z[i] or sorted(w_sets[i]) != list(st.w[i]):
            raise PreconditionError("configuration", f"W/z data for clique {i + 1} does not match the graph")
    wl = [list(ws) for ws in w_sets]
    if w1 not in wl[0]:
        raise PreconditionError("w1 in W_1", f"{w1} is not in the first outside set")
    wl[0].remove(w1)
    wl[0].insert(0, w1)
    size_a = len(wl[0])
    if a is not None and a != size_a:
        raise PreconditionError("configuration", f"a={a} but |W_1|={size_a}")
    e1, ed = st.e[0], st.e[-1]
    if e1 > ed:
        raise PreconditionError("e_1 <= e_d", f"e_1={e1} exceeds e_d={ed}")
    wd = mask_of(wl[-1])
    overlap = (l.adj[w1] & wd).bit_count()
    if overlap > 1:
        raise PreconditionError("|N(w1) & W_d| <= 1", f"w1 has {overlap} neighbours in the last outside set")

    rows = list(l.adj)
    full = (1 << l.n) - 1

    def link(u: int, v: int, on: bool):
        if on:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        else:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)

    z1 = st.z[0]
    link(w1, z1, False)
    for c in d.masks()[1:]:
        for v in members(c):
            for u in members(rows[v] & ~c & full):
                link(u, v, False)
    for u in wl[-1]:
        if u != w1:
            link(w1, u, True)
    for i in range(1, min(size_a, nd - 1)):
        wi = wl[0][i]
        if not l.adj[wi] & mask_of(wl[i]):
            for u in wl[i]:
                link(u, wi, True)
        else:
            for u in wl[i]:
                link(u, z1, True)
    for i in range(size_a, nd - 1):
        for u in wl[i]:
            link(u, z1, True)
    lp = Graph._trusted(l.n, tuple(rows))
    return LPrimeResult(lp, lp.edge_count() - l.edge_count(), -1 - overlap)
