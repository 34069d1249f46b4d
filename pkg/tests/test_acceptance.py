"""Acceptance criteria, one test each.  Every test records a single
``criterion N: PASS|FAIL  <detail>`` line, printed in the terminal summary."""

import math
import random
import time
from fractions import Fraction
from itertools import combinations

import mpmath
import pytest

from kkmin.diagnostics import check_excess_degree, select_family
from kkmin.graph import Graph
from kkmin.iso import is_isomorphic
from kkmin.search import (SearchProblem, brute_force_oracle, clear_memo, construct_matched_clique, counterexample_check,
                          is_feasible, min_edges_exact)
from kkmin.shadow import KFamily, colex_segment, lovasz_shadow_bound, shadow
from kkmin.transform import (ALPHA, CliqueFamily, b_interval, b_upper_bound, check_regularize_properties,
                             clique_count_bounds, peel, regularize)

import conftest
from conftest import random_clique_instance

SEED = 0


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _same_classes(a, b):
    return len(a) == len(b) and all(any(is_isomorphic(x, y) for y in b) for x in a)


def test_criterion_1_oracle_equivalence():
    clear_memo()
    start = time.perf_counter()
    bad = []
    cases = 0
    for t in (2, 3):
        for n in range(1, 9):
            p = SearchProblem(n, t)
            ex, orc = min_edges_exact(p), brute_force_oracle(p)
            cases += 1
            if ex.min_edges != orc.min_edges or not ex.certified or not _same_classes(ex.witnesses, orc.witnesses):
                bad.append((n, t, ex.min_edges, orc.min_edges))
    secs = time.perf_counter() - start
    report(1, not bad and secs < 300, f"{cases} cases, mismatches={bad}, {secs:.1f}s (limit 300s)")


def test_criterion_2_isolated_triangle():
    clear_memo()
    start = time.perf_counter()
    rows = []
    ok = True
    for n in (10, 11, 12):
        res = min_edges_exact(SearchProblem(n, 2))
        every = all(w.isolated_clique_components(3) for w in res.witnesses)
        complete_list = res.witness_count == len(res.witnesses)
        ok &= res.certified and every and res.all_have_isolated_clique and complete_list
        rows.append(f"n={n}: m={res.min_edges}, {res.witness_count} witness classes, isolated K3 in all={every}")
    secs = time.perf_counter() - start
    report(2, ok and secs < 1800, "; ".join(rows) + f"; {secs:.1f}s (limit 1800s)")


def test_criterion_3_disjoint_clique_tightness():
    rows = []
    ok = True
    for t in (2, 3, 4):
        for n in range(t + 1, 13, t + 1):
            res = min_edges_exact(SearchProblem(n, t))
            good = res.certified and res.min_edges == n * t // 2 == math.ceil(n * t / 2)
            ok &= good
            rows.append(f"(n={n},t={t})->{res.min_edges}")
    report(3, ok, ", ".join(rows))


def _regularize_instance(rng):
    t = rng.randint(2, 5)
    kind = rng.random()
    if kind < 0.25:
        # two (t+1)-subsets of one K_{t+2}
        base = list(range(t + 2))
        n = rng.randint(t + 3, 24)
        edges = set(combinations(base, 2))
        for u in range(t + 2, n):
            for v in rng.sample(base, rng.randint(1, t + 1)):
                edges.add((v, u))
        for a, b in combinations(range(t + 2, n), 2):
            if rng.random() < 0.3:
                edges.add((a, b))
        d1, d2 = rng.sample(base, 2)
        return Graph.from_edges(n, sorted(edges)), [v for v in base if v != d1], [v for v in base if v != d2]
    k = rng.randint(2, max(2, 24 // (t + 1) - 1))
    extra = rng.randint(1, 24 - k * (t + 1))
    g, cl = random_clique_instance(rng, k, t, extra, cross=rng.randint(0, 3))
    i, j = rng.sample(range(k), 2)
    if kind < 0.4:
        j = i
    return g, list(cl[i]), list(cl[j])


def test_criterion_4_regularization_suite():
    rng = random.Random(SEED)
    start = time.perf_counter()
    failures = []
    total = 600
    for idx in range(total):
        g, a1, a2 = _regularize_instance(rng)
        assert g.n <= 24
        rep = check_regularize_properties(g, regularize(g, a1, a2), a1, a2)
        if not rep.passed:
            failures.append((idx, [r.name for r in rep.results if not r.passed]))
    secs = time.perf_counter() - start
    report(4, not failures and secs < 60,
           f"{total} instances (seed {SEED}), failures={failures[:5]}, {secs:.1f}s (limit 60s)")


def test_criterion_5_shadow_bound_suite():
    rng = random.Random(SEED)
    start = time.perf_counter()
    violations = 0
    eq_wrong = 0
    equalities = 0
    families = []
    for _ in range(10_000):
        v = rng.randint(3, 9)
        all_sets = list(combinations(range(v), 3))
        families.append(KFamily.from_sets(3, rng.sample(all_sets, rng.randint(1, len(all_sets))), universe_n=9))
    families += [colex_segment(m, 3) for m in range(1, 85)]
    for fam in families:
        m = len(fam)
        sh = len(shadow(fam, 2))
        bound = lovasz_shadow_bound(m, 3, 2)
        if sh < bound - 1e-9:
            violations += 1
        support = {x for s in fam.sets for x in s}
        complete = m == math.comb(len(support), 3)
        tight = abs(sh - bound) <= 1e-9
        equalities += tight
        if tight != complete:
            eq_wrong += 1
    secs = time.perf_counter() - start
    report(5, violations == 0 and eq_wrong == 0 and secs < 60,
           f"{len(families)} families, violations={violations}, equality cases={equalities}, "
           f"equality off complete families={eq_wrong}, {secs:.1f}s (limit 60s)")


def test_criterion_6_matched_clique_counterexample():
    g = construct_matched_clique(4)
    tri = g.triangle_degrees()
    rep = counterexample_check(3.2)
    ok = (set(g.degrees()) == {4} and tri == [math.comb(4, 2) - 2] * 6 and tri == [4] * 6
          and rep.required == Fraction(352, 100) and rep.required <= 4 and rep.condition_holds
          and rep.block_feasible and is_feasible(g, 3.2) and not rep.block_has_isolated_clique)
    report(6, ok, f"degrees={sorted(set(g.degrees()))}, triangles/vertex={sorted(set(tri))}, "
                  f"C(3.2,2)={rep.required} <= {rep.available}, feasible={rep.block_feasible}")


def test_criterion_7_excess_degree_on_witnesses():
    checked = 0
    bad = []
    for t in (2, 3):
        for n in range(t + 1, 13):
            res = min_edges_exact(SearchProblem(n, t))
            if not res.certified:
                continue
            for w in res.witnesses:
                checked += 1
                e = check_excess_degree(w, t)
                if e.status != "pass" or e.detail["sum"] > Fraction((t + 1) ** 2, 4):
                    bad.append((n, t, e.detail["sum"]))
    report(7, checked > 0 and not bad, f"{checked} certified witnesses checked, violations={bad}")


def test_criterion_8_constants():
    mpmath.mp.dps = 60
    th_ref = 100 * mpmath.sqrt(33) / (2 * mpmath.sqrt(928))
    c_ref = 1 + mpmath.sqrt(mpmath.mpf(928) / 33)
    _, _, th, c = clique_count_bounds(99)
    err_th, err_c = abs(th - th_ref), abs(c - c_ref)
    t = Fraction(10)
    symbolic = {
        1: Fraction(3, 4) * t,
        2: 6 * ALPHA * 2 + 7,
        7: Fraction(31),
        8: Fraction(163, 7),
    }
    got = {f: b_upper_bound(f, t) for f in symbolic}
    ok = err_th < 1e-9 and err_c < 1e-9 and got == symbolic and ALPHA == Fraction(4, 7)
    report(8, ok, f"theta(99)={th:.12f} (err {float(err_th):.1e}), c={c:.12f} (err {float(err_c):.1e}), "
                  f"b_upper_bound={ {f: str(v) for f, v in got.items()} }")


def _peel_instance(rng):
    t = rng.randint(2, 5)
    k = rng.randint(1, 6)
    g, cl = random_clique_instance(rng, k, t, rng.randint(k, 3 * k), max_attach=3 * (t + 1))
    # guarantee an outside neighbour for every clique
    for c in cl:
        if not any(u not in c for v in c for u in g.neighbors(v)):
            g = g.add_edge(c[0], g.n - 1)
    return g, cl


def test_criterion_9_peeling():
    rng = random.Random(SEED)
    over = 0
    unstable = 0
    for _ in range(1000):
        g, cl = _peel_instance(rng)
        fam = CliqueFamily.of(cl)
        a, b = peel(g, fam), peel(g, fam)
        over += a.xi > len(cl)
        unstable += a.to_json() != b.to_json() or a.to_text() != b.to_text()
    traces = vacuous = interval_bad = 0
    for t in (2, 3, 4):
        for n in range(t + 1, 13):
            res = min_edges_exact(SearchProblem(n, t))
            for w in res.witnesses:
                fam = select_family(w, t)
                if not fam.cliques:
                    vacuous += 1
                    continue
                tr = peel(w, fam)
                traces += 1
                for i in range(1, tr.xi + 1):
                    if b_interval(tr, i) > b_upper_bound(tr.f_sequence[i - 1], t):
                        interval_bad += 1
    report(9, over == 0 and unstable == 0 and interval_bad == 0,
           f"1000 random traces: over-length={over}, unstable={unstable}; witness traces={traces}, "
           f"vacuous (empty low-excess family)={vacuous}, interval violations={interval_bad}")
