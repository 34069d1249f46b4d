"""Command-line entry point.

Exit codes: 0 success, 1 usage or precondition error, 2 search budget
exhausted.  JSON goes to stdout with sorted keys, so identical invocations
give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .diagnostics import verify_graph
from .graph import Graph
from .graph6 import read_graph, to_graph6
from .search import (ResultCache, SearchProblem, brute_force_oracle, construct_disjoint_cliques,
                     construct_matched_clique, counterexample_check, min_edges_exact)
from .search.problem import as_fraction, t_label
from .shadow import KFamily, lovasz_shadow_bound, shadow
from .transform import (CliqueFamily, PreconditionError, b_upper_bound, check_regularize_properties,
                        clique_count_bounds, decay_bound, peel, regularize)

EXIT_OK, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _parse_t(text: str):
    try:
        f = as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--t must be a number, got {text!r}")
    if f < 2:
        raise UsageError("--t must be at least 2")
    return int(f) if f.denominator == 1 else float(text)


def _parse_set(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated vertices, got {text!r}")


def _load_graph(arg: str | None) -> Graph:
    if not arg:
        raise UsageError("--graph is required")
    p = Path(arg)
    text = p.read_text() if p.exists() else arg
    try:
        return read_graph(text)
    except ValueError as e:
        raise UsageError(f"cannot read graph: {e}")


def _require(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n} is required for {args.command}")


def _emit_json(doc: dict, args) -> None:
    doc = dict(doc, seed=args.seed)
    text = json.dumps(doc, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
    print(text)


def _emit_graph(g: Graph, doc: dict, args) -> None:
    """graph6 on stdout (or ``--out``) plus a JSON sidecar next to it."""
    g6 = to_graph6(g)
    doc = dict(doc, graph=g6, seed=args.seed)
    text = json.dumps(doc, sort_keys=True)
    if args.out:
        Path(args.out).write_text(g6 + "\n")
        Path(args.out + ".json").write_text(text + "\n")
    print(g6)
    print(text)


def cmd_search(args) -> int:
    _require(args, "n", "t")
    t = _parse_t(args.t)
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    cache = ResultCache(args.cache)
    if not args.force:
        hit = cache.lookup(args.n, t)
        if hit is not None:
            print(f"cache hit: {cache.path}", file=sys.stderr)
            _emit_json(hit, args)
            return EXIT_OK
    res = min_edges_exact(SearchProblem(args.n, t), budget=args.budget, workers=args.workers)
    rec = res.to_record()
    if res.certified:
        cache.append(res)
    _emit_json(rec, args)
    return EXIT_OK if res.certified else EXIT_BUDGET


def cmd_oracle(args) -> int:
    _require(args, "n", "t")
    t = _parse_t(args.t)
    try:
        res = brute_force_oracle(SearchProblem(args.n, t))
    except ValueError as e:
        raise UsageError(str(e))
    _emit_json(res.to_record(), args)
    return EXIT_OK


def cmd_shadow(args) -> int:
    if not args.family:
        raise UsageError("shadow needs a family file")
    _require(args, "ell")
    try:
        fam = KFamily.from_text(Path(args.family).read_text())
        sh = shadow(fam, args.ell)
    except (OSError, ValueError) as e:
        raise UsageError(str(e))
    bound = lovasz_shadow_bound(len(fam), fam.k, args.ell) if len(fam) else 0.0
    _emit_json({"m": len(fam), "k": fam.k, "ell": args.ell, "shadow": len(sh), "bound": bound}, args)
    return EXIT_OK


def cmd_bound(args) -> int:
    _require(args, "m", "k", "ell")
    try:
        value = lovasz_shadow_bound(args.m, args.k, args.ell)
    except ValueError as e:
        raise UsageError(str(e))
    _emit_json({"m": args.m, "k": args.k, "ell": args.ell, "bound": value}, args)
    return EXIT_OK


def cmd_transform(args) -> int:
    g = _load_graph(args.graph)
    if args.a1 is None or args.a2 is None:
        raise UsageError("transform needs --a1 and --a2")
    a1, a2 = _parse_set(args.a1), _parse_set(args.a2)
    order = _parse_set(args.order) if args.order else None
    try:
        gp = regularize(g, a1, a2, order)
    except PreconditionError as e:
        raise UsageError(f"precondition failed: {e}")
    rep = check_regularize_properties(g, gp, a1, a2, order=order)
    doc = {"edge_delta": rep.edge_delta,
           "properties": {r.name: r.passed for r in rep.results}}
    _emit_graph(gp, doc, args)
    return EXIT_OK


def _parse_family(text: str | None) -> list[list[int]]:
    if not text:
        raise UsageError("--cliques is required, e.g. --cliques 0,1,2;3,4,5")
    return [_parse_set(part) for part in text.split(";") if part.strip()]


def cmd_peel(args) -> int:
    g = _load_graph(args.graph)
    try:
        fam = CliqueFamily.of(_parse_family(args.cliques))
        trace = peel(g, fam)
    except (PreconditionError, ValueError) as e:
        raise UsageError(f"precondition failed: {e}")
    if args.format == "text":
        sys.stdout.write(trace.to_text())
        return EXIT_OK
    _emit_json(json.loads(trace.to_json()), args)
    return EXIT_OK


def _random_instance(n_cliques: int, t: int, extra: int, rng: random.Random) -> tuple[Graph, list[list[int]]]:
    cliques = [list(range(i * (t + 1), (i + 1) * (t + 1))) for i in range(n_cliques)]
    n = n_cliques * (t + 1) + extra
    edges = [(a, b) for c in cliques for i, a in enumerate(c) for b in c[i + 1:]]
    inside = n_cliques * (t + 1)
    for u in range(inside, n):
        for v in rng.sample(range(inside), rng.randint(1, min(inside, t + 1))):
            edges.append((v, u))
    return Graph.from_edges(n, edges), cliques


def cmd_construct(args) -> int:
    if args.matched_clique is not None:
        try:
            g = construct_matched_clique(args.matched_clique)
        except ValueError as e:
            raise UsageError(str(e))
        _emit_graph(g, {"kind": "matched_clique", "m": args.matched_clique}, args)
    elif args.disjoint_cliques:
        _require(args, "n", "t")
        try:
            g = construct_disjoint_cliques(args.n, int(_parse_t(args.t)))
        except ValueError as e:
            raise UsageError(str(e))
        _emit_graph(g, {"kind": "disjoint_cliques", "n": args.n, "t": t_label(args.t)}, args)
    elif args.counterexample:
        _require(args, "t")
        try:
            rep = counterexample_check(_parse_t(args.t), confirm=args.confirm, budget=args.budget)
        except ValueError as e:
            raise UsageError(str(e))
        _emit_graph(rep.block, rep.to_json_dict(), args)
    elif args.random_instance:
        _require(args, "t")
        t = int(_parse_t(args.t))
        rng = random.Random(args.seed)
        g, cl = _random_instance(args.cliques_count, t, args.extra, rng)
        _emit_graph(g, {"kind": "random_instance", "cliques": cl}, args)
    else:
        raise UsageError("construct needs one of --matched-clique, --disjoint-cliques, "
                         "--counterexample, --random-instance")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    _require(args, "t")
    rep = verify_graph(g, _parse_t(args.t))
    _emit_json(rep.to_dict(), args)
    return EXIT_OK


def cmd_bounds(args) -> int:
    _require(args, "t")
    t = _parse_t(args.t)
    upper, lower, th, c = clique_count_bounds(float(t))
    doc = {"t": t_label(t), "theta": th, "c": c, "upper_leading": upper, "lower_leading": lower}
    if args.f is not None:
        if args.f < 1:
            raise UsageError("--f must be at least 1")
        doc["b_upper_bound"] = str(b_upper_bound(args.f, as_fraction(t)))
    if args.j is not None:
        if args.j < 1:
            raise UsageError("--j must be at least 1")
        doc["decay_bound"] = decay_bound(args.j, args.start if args.start is not None else 0.0)
    _emit_json(doc, args)
    return EXIT_OK


COMMANDS = {
    "search": cmd_search, "oracle": cmd_oracle, "shadow": cmd_shadow, "bound": cmd_bound,
    "transform": cmd_transform, "peel": cmd_peel, "construct": cmd_construct,
    "verify": cmd_verify, "bounds": cmd_bounds,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--t")
    common.add_argument("--k", type=int)
    common.add_argument("--ell", type=int)
    common.add_argument("--budget", type=int, help="search node limit")
    common.add_argument("--cache", help="results cache (default: $KK_CACHE or kk_cache.jsonl)")
    common.add_argument("--force", action="store_true", help="ignore cached results")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out")

    p = argparse.ArgumentParser(prog="kkmin", description="Triangle-degree extremal graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", parents=[common], help="exact minimum edge count")
    s.add_argument("--workers", type=int, default=1)
    sub.add_parser("oracle", parents=[common], help="brute-force minimum for n <= 8")
    s = sub.add_parser("shadow", parents=[common], help="shadow size of a family file")
    s.add_argument("family", nargs="?")
    s = sub.add_parser("bound", parents=[common], help="Lovasz shadow bound")
    s.add_argument("--m", type=int)
    s = sub.add_parser("transform", parents=[common], help="clique regularization")
    s.add_argument("--graph")
    s.add_argument("--a1")
    s.add_argument("--a2")
    s.add_argument("--order", help="explicit ordering of a1")
    s = sub.add_parser("peel", parents=[common], help="clique peeling trace")
    s.add_argument("--graph")
    s.add_argument("--cliques", help="semicolon-separated cliques, e.g. 0,1,2;3,4,5")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s = sub.add_parser("construct", parents=[common], help="explicit constructions")
    s.add_argument("--matched-clique", type=int, metavar="M")
    s.add_argument("--disjoint-cliques", action="store_true")
    s.add_argument("--counterexample", action="store_true")
    s.add_argument("--confirm", action="store_true", help="also run the exact search")
    s.add_argument("--random-instance", action="store_true")
    s.add_argument("--cliques-count", type=int, default=2)
    s.add_argument("--extra", type=int, default=3, help="boundary vertices in a random instance")
    s = sub.add_parser("verify", parents=[common], help="diagnostics report")
    s.add_argument("--graph")
    s = sub.add_parser("bounds", parents=[common], help="constants and bound formulas")
    s.add_argument("--f", type=int)
    s.add_argument("--j", type=int)
    s.add_argument("--start", type=float)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
