"""Inequality checkers over concrete graphs.

Every check returns a :class:`CheckEntry` whose status is one of ``pass``,
``fail``, ``vacuous`` (the hypothesis never applied) or ``not-applicable``
(the input is outside the check's setting).  Most inequalities are only
guaranteed for extremal graphs, so a failure on an arbitrary graph is data,
not an error.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .graph import Graph, mask_of, members
from .graph6 import to_graph6
from .search.problem import as_fraction, t_label
from .transform.bounds import b_upper_bound, theta
from .transform.cliques import CliqueFamily, PreconditionError
from .transform.peeling import ALPHA, PeelingTrace, b_interval, peel
from .transform.rewrites import greedy_independent_set, lambda_one_structure

PASS, FAIL, VACUOUS, NA = "pass", "fail", "vacuous", "not-applicable"

CHECK_NAMES = (
    "excess_degree",
    "clique_family",
    "neighbor_nesting",
    "cross_degree",
    "shift_sum",
    "w_structure",
    "lemma_id",
    "b_interval",
)


@dataclass
class CheckEntry:
    name: str
    status: str
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class DiagnosticsReport:
    graph: str
    t: object
    checks: list[CheckEntry]

    def __getitem__(self, name: str) -> CheckEntry:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def failures(self) -> list[CheckEntry]:
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self) -> dict:
        return {"graph": self.graph, "t": t_label(self.t), "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class DegreePartition:
    v1: int     # vertices of degree exactly t
    v2: int

    @classmethod
    def of(cls, g: Graph, t: int) -> "DegreePartition":
        v1 = mask_of(v for v in range(g.n) if g.degree(v) == t)
        return cls(v1, ((1 << g.n) - 1) & ~v1)


def _integer_t(t) -> int | None:
    f = as_fraction(t)
    return int(f) if f.denominator == 1 else None


def check_excess_degree(g: Graph, t) -> CheckEntry:
    """Total degree excess over ``t`` against ``(t+1)^2/4``."""
    ti = _integer_t(t)
    if ti is None:
        return CheckEntry("excess_degree", NA, {"reason": "t is not an integer"})
    total = sum(d - ti for d in g.degrees())
    bound = Fraction((ti + 1) ** 2, 4)
    return CheckEntry("excess_degree", PASS if total <= bound else FAIL,
                      {"sum": total, "bound": str(bound)})


def check_clique_family(g: Graph, t) -> CheckEntry:
    """At most one overlapping pair of (t+1)-cliques, and no edge between
    the private parts of any two of them."""
    ti = _integer_t(t)
    if ti is None:
        return CheckEntry("clique_family", NA, {"reason": "t is not an integer"})
    cliques = [mask_of(c) for c in g.find_cliques(ti + 1)]
    overlapping = 0
    cross = 0
    first_cross = None
    for a, b in combinations(cliques, 2):
        if a & b:
            overlapping += 1
        pa, pb = a & ~b, b & ~a
        for v in members(pa):
            hits = g.adj[v] & pb
            if hits:
                cross += hits.bit_count()
                if first_cross is None:
                    first_cross = [v, members(hits)[0]]
    detail = {"cliques": len(cliques), "intersecting_pairs": overlapping, "cross_edges": cross}
    if first_cross is not None:
        detail["first_cross_edge"] = first_cross
    if not cliques:
        return CheckEntry("clique_family", VACUOUS, detail)
    return CheckEntry("clique_family", PASS if overlapping <= 1 and cross == 0 else FAIL, detail)


def partition_A1_A2(g: Graph, t: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Split the (t+1)-cliques by whether their degree excess is below theta."""
    cut = theta(t)
    low, high = [], []
    for c in g.find_cliques(t + 1):
        excess = sum(g.degree(v) - t for v in c)
        (low if excess < cut else high).append(c)
    return low, high


def select_family(g: Graph, t: int) -> CliqueFamily:
    """Greedy family of low-excess cliques: pairwise disjoint, no edges
    between them, each with a neighbour outside."""
    low, _ = partition_A1_A2(g, t)
    chosen: list[tuple[int, ...]] = []
    used = 0
    for c in low:
        m = mask_of(c)
        if m & used or g.neighborhood_of_set(m) & used:
            continue
        if not g.neighborhood_of_set(m) & ~m:
            continue
        chosen.append(c)
        used |= m
    return CliqueFamily(t, tuple(chosen))


def _family_mask(trace: PeelingTrace) -> int:
    return trace.family.vertex_mask


def check_neighbor_nesting(g: Graph, d: CliqueFamily, trace: PeelingTrace) -> CheckEntry:
    """Overlap of family neighbourhoods: a class member against any boundary
    vertex outside its class, and members of distinct early classes against
    each other with a margin of ceil(alpha * Lambda)."""
    vd = d.vertex_mask
    if not trace.steps:
        return CheckEntry("neighbor_nesting", VACUOUS, {"reason": "empty trace"})
    b1 = trace.b1_vertices
    lam = trace.lam
    margin = math.ceil(ALPHA * lam)
    mu = {v: (g.adj[v] & vd).bit_count() for v in b1}
    same_pairs = cross_pairs = 0
    for st in trace.steps:
        kl = set(st.klass)
        for u in st.klass:
            for w in b1:
                if w in kl:
                    continue
                same_pairs += 1
                common = (g.adj[u] & g.adj[w] & vd).bit_count()
                if min(mu[u] - 1, mu[w]) < common:
                    return CheckEntry("neighbor_nesting", FAIL,
                                      {"kind": "class_vs_boundary", "step": st.index, "u": u, "other": w,
                                       "common": common})
    b = trace.b_values[0]
    for i, j in combinations(range(1, b + 1), 2):
        for u in trace.step(i).klass:
            for w in trace.step(j).klass:
                cross_pairs += 1
                common = (g.adj[u] & g.adj[w] & vd).bit_count()
                if min(mu[u], mu[w]) < common + margin:
                    return CheckEntry("neighbor_nesting", FAIL,
                                      {"kind": "distinct_classes", "steps": [i, j], "u": u, "other": w,
                                       "common": common, "margin": margin})
    detail = {"class_pairs": same_pairs, "distinct_class_pairs": cross_pairs}
    return CheckEntry("neighbor_nesting", PASS if same_pairs + cross_pairs else VACUOUS, detail)


def check_cross_degree(g: Graph, trace: PeelingTrace) -> CheckEntry:
    """Neighbours in other early classes for members of classes without a
    self-contained vertex."""
    lam = trace.lam
    if lam < 2:
        return CheckEntry("cross_degree", NA, {"reason": f"Lambda = {lam} < 2"})
    zp = trace.z_partition()
    if not zp.u1:
        return CheckEntry("cross_degree", VACUOUS, {"reason": "every early class has a self-contained vertex"})
    u_all = 0
    for i in range(1, zp.b + 1):
        u_all |= mask_of(trace.step(i).klass)
    denom = math.ceil(ALPHA * lam) - 1
    checked = 0
    for i in zp.u1:
        st = trace.step(i)
        own = mask_of(st.klass)
        bound = Fraction(lam + st.size - 2, denom)
        for u in st.klass:
            checked += 1
            c = (g.adj[u] & u_all & ~own).bit_count()
            if c > bound:
                return CheckEntry("cross_degree", FAIL, {"step": i, "vertex": u, "cross": c, "bound": str(bound)})
    return CheckEntry("cross_degree", PASS, {"vertices": checked})


def check_shift_sum(g: Graph, d: CliqueFamily, x0, trace: PeelingTrace) -> CheckEntry:
    """For each boundary vertex and each subset size of ``x0``, the largest
    possible sum of common family neighbours stays within
    ``zeta * (Lambda - ceil(alpha*Lambda)) + Lambda``."""
    vd = d.vertex_mask
    b1 = trace.b1_vertices
    if not b1:
        return CheckEntry("shift_sum", VACUOUS, {"reason": "no boundary vertices"})
    lam = trace.lam
    step = lam - math.ceil(ALPHA * lam)
    x0 = list(x0)
    for v in b1:
        terms = sorted(((g.adj[v] & g.adj[x] & vd).bit_count() for x in x0), reverse=True)
        run = 0
        for zeta in range(0, len(terms) + 1):
            if zeta:
                run += terms[zeta - 1]
            rhs = zeta * step + lam
            if run > rhs:
                return CheckEntry("shift_sum", FAIL, {"vertex": v, "zeta": zeta, "lhs": run, "rhs": rhs})
    return CheckEntry("shift_sum", PASS, {"boundary": len(b1), "x0": x0})


def check_w_structure(l: Graph, d: CliqueFamily) -> CheckEntry:
    """Outside sets of the single-neighbour configuration: each has two or
    more vertices and at least one edge; also looks for a pair (i, j, w)
    with ``|N(w) & W_j| <= 1`` and ``e_i <= e_j``."""
    if not d.cliques:
        return CheckEntry("w_structure", NA, {"reason": "empty family"})
    st = lambda_one_structure(l, d)
    if st is None:
        return CheckEntry("w_structure", NA, {"reason": "not a single-neighbour configuration"})
    sizes = [len(w) for w in st.w]
    detail: dict = {"z": list(st.z), "w_sizes": sizes, "e": list(st.e)}
    pair = None
    if len(st.w) >= 2:
        for i, j in ((i, j) for i in range(len(st.w)) for j in range(len(st.w)) if i != j):
            if st.e[i] > st.e[j]:
                continue
            wj = mask_of(st.w[j])
            for w in st.w[i]:
                if (l.adj[w] & wj).bit_count() <= 1:
                    pair = [i + 1, j + 1, w]
                    break
            if pair:
                break
        detail["pair"] = pair
    else:
        detail["pair"] = "vacuous"
    bad = [i + 1 for i, (s, e) in enumerate(zip(sizes, st.e)) if s < 2 or e == 0]
    if bad:
        detail["bad_cliques"] = bad
        return CheckEntry("w_structure", FAIL, detail)
    return CheckEntry("w_structure", PASS, detail)


def check_lemma_id(g: Graph, d: CliqueFamily, t) -> CheckEntry:
    """Boundary vertices with many family neighbours touch few cliques."""
    th = theta(float(as_fraction(t)))
    cut3 = math.sqrt(2 * th) + 3
    cut2 = math.sqrt(3 * th) + 5
    vd = d.vertex_mask
    masks = d.masks()
    applied = 0
    for u in members(g.neighborhood_of_set(vd) & ~vd):
        mu = (g.adj[u] & vd).bit_count()
        k = sum(1 for m in masks if g.adj[u] & m)
        if mu >= cut3 - 1e-9:
            applied += 1
            if k > 3:
                return CheckEntry("lemma_id", FAIL, {"vertex": u, "mu": mu, "k": k, "part": "i"})
        if mu >= cut2 - 1e-9:
            if k > 2:
                return CheckEntry("lemma_id", FAIL, {"vertex": u, "mu": mu, "k": k, "part": "ii"})
    detail = {"cut_i": round(cut3, 12), "cut_ii": round(cut2, 12), "applied": applied}
    return CheckEntry("lemma_id", PASS if applied else VACUOUS, detail)


def check_b_interval(trace: PeelingTrace, t) -> CheckEntry:
    """Every interval length against its upper bound."""
    if not trace.steps:
        return CheckEntry("b_interval", VACUOUS, {"reason": "empty trace"})
    for i, (f, b) in enumerate(zip(trace.f_sequence, trace.b_values), start=1):
        bound = b_upper_bound(f, t)
        if b > bound:
            return CheckEntry("b_interval", FAIL, {"step": i, "f": f, "b": b, "bound": str(bound)})
    return CheckEntry("b_interval", PASS, {"b": list(trace.b_values)})


def verify_graph(g: Graph, t) -> DiagnosticsReport:
    """Run every registered check on ``g``."""
    entries = [check_excess_degree(g, t), check_clique_family(g, t)]
    ti = _integer_t(t)
    rest = ("neighbor_nesting", "cross_degree", "shift_sum", "w_structure", "lemma_id", "b_interval")
    if ti is None:
        entries += [CheckEntry(n, NA, {"reason": "t is not an integer"}) for n in rest]
    else:
        fam = select_family(g, ti)
        if not fam.cliques:
            entries += [CheckEntry(n, VACUOUS, {"reason": "no non-isolated low-excess clique"}) for n in rest]
        else:
            trace = peel(g, fam)
            x0 = greedy_independent_set(g, trace).vertices
            entries += [
                check_neighbor_nesting(g, fam, trace),
                check_cross_degree(g, trace),
                check_shift_sum(g, fam, x0, trace),
                check_w_structure(g, fam),
                check_lemma_id(g, fam, ti),
                check_b_interval(trace, ti),
            ]
    return DiagnosticsReport(to_graph6(g), t, entries)
