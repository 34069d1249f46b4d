"""Clique regularization: concentrate boundary neighbourhoods of two
(t+1)-cliques onto initial segments of the first one."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from ..graph import Graph, mask_of, members
from .cliques import PreconditionError


def _ordered_clique(g: Graph, a1: Iterable[int], order: Sequence[int] | None) -> list[int]:
    verts = sorted(set(a1))
    if order is not None:
        if sorted(order) != verts:
            raise PreconditionError("ordering", "order must be a permutation of a1")
        verts = list(order)
    return verts


def regularize(g: Graph, a1: Iterable[int], a2: Iterable[int], order: Sequence[int] | None = None) -> Graph:
    """Rewrite ``g`` around the cliques ``a1`` and ``a2``.

    Edges between ``a1 - a2`` and ``a2 - a1`` are dropped, and every vertex
    ``u`` outside ``a1 | a2`` that touches them gets the first ``m_u`` vertices
    of ``a1`` (ascending labels unless ``order`` is given), where ``m_u`` is
    ``min(|N(u) & (a1 | a2)|, t + 1)``.
    """
    a1 = list(a1)
    a2 = list(a2)
    v_order = _ordered_clique(g, a1, order)
    m1, m2 = mask_of(a1), mask_of(a2)
    size = len(v_order)
    if m2.bit_count() != size or len(a2) != size:
        raise PreconditionError("clique size", "a1 and a2 must both have t+1 vertices")
    for m, name in ((m1, "a1"), (m2, "a2")):
        if any(v >= g.n for v in members(m)) or not g.is_clique(m):
            raise PreconditionError("clique", f"{name} does not induce a complete graph")

    union = m1 | m2
    only1, only2 = m1 & ~m2, m2 & ~m1
    rows = list(g.adj)
    for v in members(only1):
        rows[v] &= ~only2
    for v in members(only2):
        rows[v] &= ~only1

    boundary = g.neighborhood_of_set(union) & ~union
    prefix = [0]
    for v in v_order:
        prefix.append(prefix[-1] | (1 << v))
    for u in members(boundary):
        m_u = min((g.adj[u] & union).bit_count(), size)
        for v in members(rows[u] & union):
            rows[v] &= ~(1 << u)
        rows[u] = (rows[u] & ~union) | prefix[m_u]
        for v in members(prefix[m_u]):
            rows[v] |= 1 << u
    return Graph._trusted(g.n, tuple(rows))


@dataclass
class PropertyResult:
    name: str
    passed: bool
    witness: object = None


@dataclass
class RegularizeReport:
    t: int
    results: list[PropertyResult] = field(default_factory=list)
    edge_delta: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def strict_decrease(self) -> bool:
        """Informational: on an extremal input this signals a contradiction."""
        return self.edge_delta < 0

    def __getitem__(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def check_regularize_properties(g: Graph, gp: Graph, a1: Iterable[int], a2: Iterable[int],
                                t: int | None = None, order: Sequence[int] | None = None) -> RegularizeReport:
    """Check the four guarantees of :func:`regularize` on a concrete pair."""
    a1 = list(a1)
    a2 = list(a2)
    v_order = _ordered_clique(g, a1, order)
    if t is None:
        t = len(v_order) - 1
    m1, m2 = mask_of(a1), mask_of(a2)
    union = m1 | m2
    report = RegularizeReport(t, edge_delta=gp.edge_count() - g.edge_count())

    report.results.append(PropertyResult("edge_non_increase", report.edge_delta <= 0,
                                         None if report.edge_delta <= 0 else report.edge_delta))

    bad = None
    if not gp.is_clique(m1):
        bad = ("a1 not complete", tuple(members(m1)))
    elif not gp.is_clique(m2):
        bad = ("a2 not complete", tuple(members(m2)))
    else:
        for v in members(m2 & ~m1):
            stray = gp.adj[v] & ~m2
            if stray:
                bad = ("edge leaves a2", (v, members(stray)[0]))
                break
    report.results.append(PropertyResult("edge_confinement", bad is None, bad))

    bad = None
    for a3 in g.find_cliques(t + 1):
        m3 = mask_of(a3)
        m = (m3 & union).bit_count()
        a4 = (m3 & ~union) | mask_of(v_order[:m])
        if a4.bit_count() != t + 1 or not gp.is_clique(a4):
            bad = (a3, tuple(members(a4)))
            break
    report.results.append(PropertyResult("clique_shifting", bad is None, bad))

    need = Fraction(t * (t - 1), 2)
    floor_g = min(Fraction(g.min_triangle_degree()), need)
    tri_gp = gp.triangle_degrees()
    low = [v for v, c in enumerate(tri_gp) if c < floor_g]
    report.results.append(PropertyResult("triangle_condition", not low,
                                         (low[0], tri_gp[low[0]]) if low else None))
    return report
