"""Command-line interface.

Results go to stdout, diagnostics to stderr. Exit status: 0 success,
1 no path, 2 usage or input error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import bench as benchmod
from .edgelist import ParseError, load_hierarchy, read_graph, save_hierarchy
from .hierarchy import DEFAULT_BUDGET, build_hierarchy, hierarchical_shortest_path
from .unvalued import DEFAULT_MAX_PATHS, format_path, iter_layer_paths, meet_layers, shortest_paths
from .valued import build_valued_hierarchy, hierarchical_weighted_path, shortest_weighted_path

log = logging.getLogger("bitpath")

EXIT_OK, EXIT_NO_PATH, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fmt_cost(cost: int, scale: int) -> str:
    f = Fraction(cost, scale)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _vertex(arg: int, one_based: bool, order: int) -> int:
    v = arg - 1 if one_based else arg
    if not 0 <= v < order:
        raise UsageError(f"vertex {arg} is not in the graph ({order} vertices)")
    return v


def _load(args):
    """Return ``(level-0 graph, hierarchy or None)`` for --graph / --hierarchy."""
    if args.hierarchy:
        with open(args.hierarchy, encoding="utf-8") as fh:
            h = load_hierarchy(fh)
        return h.graph(0), h
    return read_graph(args.graph, one_based=args.one_based), None


def cmd_build(args) -> int:
    g = read_graph(args.graph, one_based=args.one_based)
    h = build_valued_hierarchy(g, args.min_order) if g.weighted else build_hierarchy(g, args.min_order)
    with open(args.out, "w", encoding="utf-8") as fh:
        save_hierarchy(h, fh)
    orders = " ".join(str(lv.graph.order) for lv in h.levels)
    print(f"levels {len(h)}: {orders}", file=sys.stderr)
    return EXIT_OK


def cmd_query(args) -> int:
    g, h = _load(args)
    a = _vertex(args.source, args.one_based, g.order)
    b = _vertex(args.target, args.one_based, g.order)
    limit = args.all_paths
    if g.weighted:
        if args.flat:
            res = shortest_weighted_path(g, a, b, limit)
        else:
            h = h or build_valued_hierarchy(g)
            res = hierarchical_weighted_path(h, a, b, limit, args.budget)
        length = res.hop_length
    else:
        if args.flat:
            res = shortest_paths(g, a, b, limit)
        else:
            h = h or build_hierarchy(g)
            res = hierarchical_shortest_path(h, a, b, limit, args.budget)
        length = res.hop_length
    if length is None:
        print(f"there is no path between {args.source} and {args.target}", file=sys.stderr)
        return EXIT_NO_PATH
    if res.fallback:
        log.info("candidate budget exceeded; answered by flat search")
    for p in res.paths:
        print(format_path(p, args.one_based))
    print(f"length {length}")
    if g.weighted:
        print(f"cost {_fmt_cost(res.cost, res.scale)}")
    if res.truncated:
        print(f"more than {limit} paths; output truncated", file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    g, _ = _load(args)
    a = _vertex(args.source, args.one_based, g.order)
    b = _vertex(args.target, args.one_based, g.order)
    if args.length < 0:
        raise UsageError("--length must be non-negative")
    meet = meet_layers(g, a, b, args.length)
    if not meet.feasible:
        print(f"there is no path of length {args.length} between {args.source} and {args.target}",
              file=sys.stderr)
        return EXIT_NO_PATH
    for i, p in enumerate(iter_layer_paths(g, meet.layers)):
        if i >= args.max_paths:
            print(f"more than {args.max_paths} paths; output truncated", file=sys.stderr)
            break
        print(format_path(p, args.one_based))
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.gen != "modmul":
        raise UsageError(f"unknown generator {args.gen!r}")
    reports = []
    for n in args.n:
        r = benchmod.bench_modmul(
            n, args.k, args.queries, args.seed, flat=args.flat, verify=args.verify,
            max_paths=args.max_paths, budget=args.budget,
        )
        reports.append(r)
        print(r.summary())
        print()
    if len(reports) > 1:
        print("scaling (time vs hop length x log2 V):")
        for row in benchmod.scaling_rows(reports):
            print(f"  V={row['n']:>8} mean {row['mean_seconds']:.4f} s  mean hops {row['mean_hops']:.2f}"
                  f"  hops*log2V {row['mean_hops_x_log2n']:.1f}"
                  f"  s/unit {row['mean_seconds_per_unit']:.2e}  fallbacks {row['fallbacks']}")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(reports[0].to_csv())
            for r in reports[1:]:
                fh.write(r.to_csv().split("\n", 1)[1])
    return EXIT_MISMATCH if any(r.mismatches for r in reports) else EXIT_OK


def cmd_verify(args) -> int:
    rep = benchmod.verify_random(args.random, args.max_v, args.weighted, args.seed)
    for m in rep.mismatches:
        print(f"mismatch {m}", file=sys.stderr)
    print(f"instances {rep.instances} mismatches {len(rep.mismatches)} fallbacks {rep.fallbacks}")
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def _graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="edge-list file")
    src.add_argument("--hierarchy", help="hierarchy file written by 'build'")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bitpath", description="Bit-row shortest-path tools.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build and save a hierarchy of quotient graphs")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--min-order", type=int, default=1)
    p.add_argument("--one-based", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="shortest path(s) between two vertices")
    _graph_source(p)
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("--all-paths", type=int, default=1, metavar="N",
                   help="print up to N shortest paths (default 1)")
    p.add_argument("--flat", action="store_true", help="skip the hierarchy")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--one-based", action="store_true")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("enumerate", help="all walks of a fixed hop length")
    _graph_source(p)
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--max-paths", type=int, default=DEFAULT_MAX_PATHS)
    p.add_argument("--one-based", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bench", help="time random queries on a generated graph")
    p.add_argument("--gen", default="modmul")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--queries", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verify", type=int, default=10, help="queries checked against BFS")
    p.add_argument("--max-paths", type=int, default=2048)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--flat", action="store_true")
    p.add_argument("--csv", help="write per-query records here")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="compare against BFS/Dijkstra on random graphs")
    p.add_argument("--random", type=int, required=True)
    p.add_argument("--max-v", type=int, required=True)
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (ParseError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
