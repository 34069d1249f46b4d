import math
from fractions import Fraction
from itertools import combinations

import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from kkmin.diagnostics import (CHECK_NAMES, FAIL, NA, PASS, VACUOUS, DegreePartition, check_b_interval,
                               check_clique_family, check_cross_degree, check_excess_degree,
                               check_lemma_id, check_neighbor_nesting, check_shift_sum,
                               check_w_structure, partition_A1_A2, select_family, verify_graph)
from kkmin.graph import Graph, disjoint_union
from kkmin.search import SearchProblem, construct_disjoint_cliques, min_edges_exact
from kkmin.transform import CliqueFamily, PreconditionError, peel
from kkmin.transform.bounds import theta

from conftest import random_clique_instance


def ce(c):
    return list(combinations(c, 2))


def test_excess_degree():
    e = check_excess_degree(construct_disjoint_cliques(8, 3), 3)
    assert e.status == PASS and e.detail["sum"] == 0
    e = check_excess_degree(Graph.complete(5), 3)
    assert e.status == FAIL and e.detail["sum"] == 5 and e.detail["bound"] == "4"
    assert check_excess_degree(Graph.complete(5), 3.5).status == NA


def test_clique_family():
    e = check_clique_family(construct_disjoint_cliques(9, 2), 2)
    assert e.status == PASS and e.detail["intersecting_pairs"] == 0
    e = check_clique_family(Graph.complete(4), 2)
    assert e.status == FAIL and e.detail["cliques"] == 4 and e.detail["intersecting_pairs"] == 6
    # one overlapping pair with no cross edge: a diamond's two triangles share an edge, and 2-3 is absent
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    e = check_clique_family(diamond, 2)
    assert e.detail["intersecting_pairs"] == 1 and e.detail["cross_edges"] == 0 and e.status == PASS
    assert check_clique_family(Graph(4), 2).status == VACUOUS


def test_degree_partition():
    g = Graph.from_edges(5, ce(range(4)) + [(3, 4)])
    p = DegreePartition.of(g, 3)
    assert p.v1 == 0b00111 and p.v2 == 0b11000 and p.v1 | p.v2 == 0b11111 and not p.v1 & p.v2


def test_partition_A1_A2():
    low, high = partition_A1_A2(construct_disjoint_cliques(6, 2), 2)
    assert len(low) == 2 and not high
    g = Graph.from_edges(6, ce((0, 1, 2)) + [(0, 3), (1, 4), (2, 5)])
    assert 3 >= theta(2)
    assert partition_A1_A2(g, 2) == ([], [(0, 1, 2)])
    assert partition_A1_A2(Graph(5), 2) == ([], [])


def nesting_reference(g, fam, trace):
    """Both overlap inequalities evaluated with plain sets."""
    vd = {v for c in fam.cliques for v in c}
    nb = {v: set(g.neighbors(v)) for v in range(g.n)}
    mu = {u: len(nb[u] & vd) for u in trace.b1_vertices}
    margin = math.ceil(Fraction(4, 7) * trace.lam)
    for s in trace.steps:
        for u in s.klass:
            for w in trace.b1_vertices:
                if w not in s.klass and min(mu[u] - 1, mu[w]) < len(nb[u] & nb[w] & vd):
                    return False
    b = trace.b_values[0]
    for i, j in combinations(range(b), 2):
        for u in trace.steps[i].klass:
            for w in trace.steps[j].klass:
                if min(mu[u], mu[w]) < len(nb[u] & nb[w] & vd) + margin:
                    return False
    return True


def test_neighbor_nesting():
    g = Graph.from_edges(4, ce((0, 1, 2)) + [(0, 3)])
    fam = CliqueFamily.of([(0, 1, 2)])
    assert check_neighbor_nesting(g, fam, peel(g, fam)).status == VACUOUS

    cl = [(0, 1, 2), (3, 4, 5), (6, 7, 8)]
    edges = [e for c in cl for e in ce(c)]
    edges += [(0, 9), (1, 9), (3, 9), (0, 10), (1, 10), (3, 10), (6, 11), (7, 11), (4, 12)]
    g = Graph.from_edges(13, edges)
    fam = CliqueFamily.of(cl)
    tr = peel(g, fam)
    e = check_neighbor_nesting(g, fam, tr)
    assert e.status in (PASS, FAIL) and (e.status == PASS) == nesting_reference(g, fam, tr)
    assert e.status == PASS and e.detail["class_pairs"] == 2 * 2 + 3


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_neighbor_nesting_holds_on_every_trace(seed):
    # a class member maximizes its surviving neighbourhood and every later
    # class keeps f above the interval threshold, so neither side can break
    rng = random.Random(seed)
    t = rng.randint(2, 4)
    k = rng.randint(1, 6)
    g, cl = random_clique_instance(rng, k, t, rng.randint(k, 3 * k), max_attach=3 * (t + 1))
    fam = CliqueFamily.of(cl)
    try:
        tr = peel(g, fam)
    except PreconditionError:
        assume(False)
    e = check_neighbor_nesting(g, fam, tr)
    assert e.status != FAIL and nesting_reference(g, fam, tr)


def test_cross_degree():
    edges = []
    for i in range(3):
        edges += ce((3 * i, 3 * i + 1, 3 * i + 2)) + [(3 * i, 9 + i), (3 * i + 1, 9 + i)]
    g = Graph.from_edges(12, edges)
    fam = CliqueFamily.of([(0, 1, 2), (3, 4, 5), (6, 7, 8)])
    assert check_cross_degree(g, peel(g, fam)).status == VACUOUS      # every class self-contained
    g2 = g.add_edge(9, 10).add_edge(10, 11)
    tr = peel(g2, fam)
    e = check_cross_degree(g2, tr)
    # Lambda = 2, class sizes 1: bound (2 + 1 - 2) / (2 - 1) = 1; vertex 10 has two cross neighbours
    assert tr.lam == 2 and e.status == FAIL and e.detail["vertex"] == 10 and e.detail["bound"] == "1"
    g3 = Graph.from_edges(4, ce((0, 1, 2)) + [(0, 3)])
    f3 = CliqueFamily.of([(0, 1, 2)])
    assert check_cross_degree(g3, peel(g3, f3)).status == NA


def test_cross_degree_bound_two():
    # two vertices sharing a class (a_i = 2) under Lambda = 2: bound 2
    edges = []
    for i in range(4):
        edges += ce((3 * i, 3 * i + 1, 3 * i + 2))
    edges += [(0, 12), (1, 12), (0, 13), (1, 13)]
    edges += [(3, 14), (4, 14), (6, 15), (7, 15), (9, 16), (10, 16)]
    edges += [(12, 14), (12, 15), (13, 16)]
    g = Graph.from_edges(17, edges)
    fam = CliqueFamily.of([(0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11)])
    tr = peel(g, fam)
    assert tr.step(1).klass == (12, 13)
    e = check_cross_degree(g, tr)
    assert e.status == PASS
    e = check_cross_degree(g.add_edge(12, 16), tr)
    assert e.status == FAIL and e.detail["vertex"] == 12 and e.detail["cross"] == 3 and e.detail["bound"] == "2"


def test_shift_sum():
    cl = [(0, 1, 2), (3, 4, 5)]
    edges = [e for c in cl for e in ce(c)] + [(0, 6), (1, 6), (3, 7), (4, 7), (0, 8), (3, 8)]
    g = Graph.from_edges(9, edges)
    fam = CliqueFamily.of(cl)
    tr = peel(g, fam)
    assert tr.lam == 2
    e = check_shift_sum(g, fam, [], tr)
    assert e.status == PASS
    # vertex 6 vs x=6: 2 common, vs x=8: 1 common; zeta=1 gives 2 <= 0 + 2
    e = check_shift_sum(g, fam, [6, 7], tr)
    assert e.status == PASS
    e = check_shift_sum(g, fam, [6, 8], tr)
    assert e.status == FAIL and e.detail == {"vertex": 6, "zeta": 2, "lhs": 3, "rhs": 2}


def w_config(independent_w=False):
    cl = [(0, 1, 2), (3, 4, 5)]
    edges = [e for c in cl for e in ce(c)] + [(0, 6), (0, 7), (3, 8), (3, 9)]
    if not independent_w:
        edges += [(6, 7), (8, 9)]
    return Graph.from_edges(10, edges), CliqueFamily.of(cl)


def test_w_structure():
    g, fam = w_config()
    e = check_w_structure(g, fam)
    assert e.status == PASS and e.detail["w_sizes"] == [2, 2] and e.detail["pair"] == [1, 2, 6]
    g, fam = w_config(independent_w=True)
    assert check_w_structure(g, fam).status == FAIL
    one = Graph.from_edges(5, ce((0, 1, 2)) + [(0, 3), (0, 4), (3, 4)])
    e = check_w_structure(one, CliqueFamily.of([(0, 1, 2)]))
    assert e.status == PASS and e.detail["pair"] == "vacuous"
    g, fam = w_config()
    assert check_w_structure(g.add_edge(1, 6), fam).status == NA


def test_lemma_id():
    g, fam = w_config()
    assert check_lemma_id(g, fam, 2).status == VACUOUS
    # t = 2: theta is tiny, so mu >= sqrt(2 theta) + 3 means mu >= 4; touch four cliques
    cl = [(3 * i, 3 * i + 1, 3 * i + 2) for i in range(4)]
    edges = [e for c in cl for e in ce(c)] + [(3 * i, 12) for i in range(4)]
    g = Graph.from_edges(13, edges)
    e = check_lemma_id(g, CliqueFamily.of(cl), 2)
    assert math.sqrt(2 * theta(2)) + 3 <= 4
    assert e.status == FAIL and e.detail["k"] == 4 and e.detail["part"] == "i"


def test_b_interval_check():
    edges = []
    for i in range(3):
        edges += ce((3 * i, 3 * i + 1, 3 * i + 2)) + [(3 * i, 9 + i)]
    g = Graph.from_edges(12, edges)
    tr = peel(g, CliqueFamily.of([(0, 1, 2), (3, 4, 5), (6, 7, 8)]))
    assert tr.b_values == (3, 2, 1)
    # f = 1 allows at most 3t/4 = 3/2 steps: a hand-built graph may exceed it
    e = check_b_interval(tr, 2)
    assert e.status == FAIL and e.detail == {"step": 1, "f": 1, "b": 3, "bound": "3/2"}
    assert check_b_interval(tr, 4).status == PASS


def test_verify_graph_report():
    rep = verify_graph(construct_disjoint_cliques(6, 2), 2)
    assert [c.name for c in rep.checks] == list(CHECK_NAMES)
    assert rep["excess_degree"].status == PASS
    assert rep["neighbor_nesting"].status == VACUOUS
    d = rep.to_dict()
    assert set(d) == {"graph", "t", "checks"}
    assert all(set(c) == {"name", "status", "detail"} for c in d["checks"])
    assert verify_graph(construct_disjoint_cliques(6, 2), 2).to_json() == rep.to_json()
    frac = verify_graph(Graph.complete(6).remove_edge(0, 1).remove_edge(2, 3).remove_edge(4, 5), 3.2)
    assert all(c.status == NA for c in frac.checks)


def test_verify_on_hand_built_family():
    cl = [(0, 1, 2), (3, 4, 5)]
    edges = [e for c in cl for e in ce(c)] + [(0, 6), (1, 6), (2, 6), (3, 7), (4, 7), (6, 7)]
    g = Graph.from_edges(8, edges)
    # at t = 2 the excess cutoff is below 1, so no clique with an outside
    # neighbour is low-excess and the peel-based checks have nothing to inspect
    assert theta(2) < 1
    assert not select_family(g, 2).cliques
    rep = verify_graph(g, 2)
    assert {c.name for c in rep.checks} == set(CHECK_NAMES)
    assert all(rep[n].status == VACUOUS for n in CHECK_NAMES[2:])


@pytest.mark.parametrize("t", [2, 3])
def test_certified_witnesses_pass_substantively(t):
    for n in range(t + 1, 11):
        res = min_edges_exact(SearchProblem(n, t))
        assert res.certified
        for w in res.witnesses:
            rep = verify_graph(w, t)
            assert rep["excess_degree"].status == PASS
            assert rep["clique_family"].status == PASS
