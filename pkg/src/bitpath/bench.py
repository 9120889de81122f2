"""Timing harness for random shortest-path queries."""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from .bitgraph import Graph
from .edgelist import generate_modmul, random_digraph
from .hierarchy import DEFAULT_BUDGET, Hierarchy, build_hierarchy, choose_start_level, hierarchical_shortest_path
from .oracle import adjacency, bfs_distance, dijkstra_distance
from .unvalued import DEFAULT_MAX_PATHS, shortest_paths
from .valued import build_valued_hierarchy, hierarchical_weighted_path, shortest_weighted_path

__all__ = [
    "QueryRecord",
    "BenchReport",
    "VerifyReport",
    "sample_pairs",
    "run_bench",
    "bench_modmul",
    "scaling_rows",
    "verify_random",
]


@dataclass
class QueryRecord:
    source: int
    target: int
    seconds: float
    hop_length: int | None
    path_count: int
    fallback: bool
    verified: bool | None = None


@dataclass
class BenchReport:
    order: int
    edges: int
    params: dict = field(default_factory=dict)
    build_seconds: float = 0.0
    start_level: int = 0
    levels: int = 1
    records: list[QueryRecord] = field(default_factory=list)

    @property
    def times(self) -> list[float]:
        return [r.seconds for r in self.records]

    @property
    def mean(self) -> float:
        return statistics.fmean(self.times) if self.records else 0.0

    @property
    def median(self) -> float:
        return statistics.median(self.times) if self.records else 0.0

    @property
    def max(self) -> float:
        return max(self.times, default=0.0)

    @property
    def answered(self) -> list[QueryRecord]:
        return [r for r in self.records if r.hop_length is not None]

    @property
    def path_count_range(self) -> tuple[int, int] | None:
        counts = [r.path_count for r in self.answered]
        return (min(counts), max(counts)) if counts else None

    @property
    def fallbacks(self) -> int:
        return sum(r.fallback for r in self.records)

    @property
    def verified(self) -> int:
        return sum(r.verified is True for r in self.records)

    @property
    def mismatches(self) -> int:
        return sum(r.verified is False for r in self.records)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "source", "target", "seconds", "hop_length",
                    "hops_x_log2n", "path_count", "fallback", "verified"])
        log2n = math.log2(self.order)
        for r in self.records:
            hx = "" if r.hop_length is None else f"{r.hop_length * log2n:.3f}"
            w.writerow([self.order, r.source, r.target, f"{r.seconds:.6f}",
                        "" if r.hop_length is None else r.hop_length, hx,
                        r.path_count, int(r.fallback),
                        "" if r.verified is None else int(r.verified)])
        return buf.getvalue()

    def summary(self) -> str:
        pc = self.path_count_range
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [
            f"graph: V={self.order} E={self.edges} {params}".rstrip(),
            f"build: {self.build_seconds:.3f} s, {self.levels} levels, start level {self.start_level}",
            f"queries: {len(self.records)} ({len(self.answered)} answered)",
            f"time per query: mean {self.mean:.4f} s, median {self.median:.4f} s, max {self.max:.4f} s",
            "path count: " + ("n/a" if pc is None else f"{pc[0]}..{pc[1]}"),
            f"fallbacks to flat search: {self.fallbacks}",
            f"oracle checks: {self.verified} passed, {self.mismatches} failed",
        ]
        return "\n".join(lines)


def sample_pairs(n: int, count: int, seed: int | None) -> list[tuple[int, int]]:
    """Uniform random pairs of distinct vertices."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        a, b = (int(x) for x in rng.integers(0, n, size=2))
        if a != b:
            out.append((a, b))
    return out


def run_bench(
    g: Graph,
    queries: int,
    seed: int | None = 0,
    hierarchy: Hierarchy | None = None,
    flat: bool = False,
    verify: int = 10,
    max_paths: int = DEFAULT_MAX_PATHS,
    budget: int = DEFAULT_BUDGET,
    params: dict | None = None,
) -> BenchReport:
    """Time ``queries`` random queries; the first ``verify`` are checked against BFS.

    Building the hierarchy is timed separately from the queries.
    """
    t0 = time.perf_counter()
    if hierarchy is None and not flat:
        hierarchy = build_hierarchy(g)
    build = time.perf_counter() - t0
    report = BenchReport(
        g.order, g.edge_count, dict(params or {}), build,
        start_level=0 if hierarchy is None else choose_start_level(hierarchy),
        levels=1 if hierarchy is None else len(hierarchy),
    )
    report.params.setdefault("seed", seed)
    report.params.setdefault("mode", "flat" if flat else "hierarchical")
    adj = None
    for i, (a, b) in enumerate(sample_pairs(g.order, queries, seed)):
        t = time.perf_counter()
        if flat:
            res = shortest_paths(g, a, b, max_paths)
        else:
            res = hierarchical_shortest_path(hierarchy, a, b, max_paths, budget)
        dt = time.perf_counter() - t
        rec = QueryRecord(a, b, dt, res.hop_length, res.path_count_found, res.fallback)
        if i < verify:
            if adj is None:
                adj = adjacency(g)
            expected = bfs_distance(g, a, b, adj=adj)
            rec.verified = expected == res.hop_length and all(
                g.is_path(p) and p[0] == a and p[-1] == b and len(p) - 1 == res.hop_length
                for p in res.paths
            )
        report.records.append(rec)
    return report


def bench_modmul(n: int, k: int, queries: int, seed: int | None = 0, **kw) -> BenchReport:
    g = generate_modmul(n, k)
    return run_bench(g, queries, seed, params={"gen": "modmul", "n": n, "k": k}, **kw)


def scaling_rows(reports: list[BenchReport]) -> list[dict]:
    """Per-size aggregates of query time against hop length x log2 V."""
    rows = []
    for r in reports:
        ans = r.answered
        xs = [q.hop_length * math.log2(r.order) for q in ans]
        ys = [q.seconds for q in ans]
        ratio = [y / x for x, y in zip(xs, ys) if x > 0]
        rows.append({
            "n": r.order,
            "edges": r.edges,
            "queries": len(r.records),
            "mean_seconds": r.mean,
            "mean_hops": statistics.fmean(q.hop_length for q in ans) if ans else float("nan"),
            "mean_hops_x_log2n": statistics.fmean(xs) if xs else float("nan"),
            "mean_seconds_per_unit": statistics.fmean(ratio) if ratio else float("nan"),
            "fallbacks": r.fallbacks,
            "verified": r.verified,
            "mismatches": r.mismatches,
        })
    return rows


@dataclass
class VerifyReport:
    instances: int = 0
    mismatches: list[str] = field(default_factory=list)
    fallbacks: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_random(count: int, max_v: int, weighted: bool = False, seed: int | None = 0,
                  densities: tuple[float, ...] = (0.02, 0.1, 0.3)) -> VerifyReport:
    """Compare flat and hierarchical searches with the oracles on random digraphs."""
    rng = np.random.default_rng(seed)
    report = VerifyReport()
    for i in range(count):
        n = int(rng.integers(2, max_v + 1))
        p = densities[i % len(densities)]
        g = random_digraph(n, p, rng, max_weight=9 if weighted else None)
        a, b = (int(x) for x in rng.integers(0, n, size=2))
        tag = f"#{i} V={n} p={p} {a}->{b}"
        report.instances += 1
        if weighted:
            expected = dijkstra_distance(g, a, b)
            flat = shortest_weighted_path(g, a, b)
            hier = hierarchical_weighted_path(build_valued_hierarchy(g), a, b)
            got = (flat.cost, hier.cost)
            same_paths = flat.paths == hier.paths
        else:
            expected = bfs_distance(g, a, b)
            flat = shortest_paths(g, a, b)
            hier = hierarchical_shortest_path(build_hierarchy(g), a, b)
            got = (flat.hop_length, hier.hop_length)
            same_paths = flat.paths == hier.paths
        report.fallbacks += hier.fallback
        if got != (expected, expected) or not same_paths:
            report.mismatches.append(f"{tag}: oracle {expected}, flat {got[0]}, hierarchical {got[1]}")
    return report
