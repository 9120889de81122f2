"""Shortest paths under positive integer edge weights.

Rational weights are scaled to integers by the lcm of their denominators.
The search starts from the minimum hop count and keeps trying longer hop
counts while the hop count is still below the best cost: with every weight
at least 1, a walk of h hops costs at least h.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .bitgraph import Graph, Path
from .hierarchy import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Hierarchy,
    Level,
    Partition,
    _Search,
    build_hierarchy,
    choose_start_level,
    pair_partition,
    quotient_edges,
)
from .unvalued import DEFAULT_MAX_PATHS, shortest_path_length

__all__ = [
    "DomainError",
    "HopTables",
    "WeightedQueryResult",
    "rationalize_weights",
    "min_cost_at_hops",
    "shortest_weighted_path",
    "thicken_valued",
    "build_valued_hierarchy",
    "hierarchical_weighted_path",
]

INF = np.int64(2**62)


class DomainError(ValueError):
    """A weight outside the supported domain (zero or negative)."""


@dataclass
class WeightedQueryResult:
    cost: int | None
    hop_length: int | None = None
    paths: list[Path] = field(default_factory=list)
    scale: int = 1
    truncated: bool = False
    fallback: bool = False

    @property
    def found(self) -> bool:
        return self.cost is not None

    @property
    def rational_cost(self) -> Fraction | None:
        return None if self.cost is None else Fraction(self.cost, self.scale)


def rationalize_weights(weights: Iterable) -> tuple[list[int], int]:
    """Scale rationals to integers; returns ``(integers, scale)``."""
    fr = [Fraction(w) for w in weights]
    for w in fr:
        if w <= 0:
            raise DomainError(f"edge weight {w} must be strictly positive")
    scale = math.lcm(*(w.denominator for w in fr)) if fr else 1
    return [int(w * scale) for w in fr], scale


def _require_weights(g: Graph) -> None:
    if not g.weighted:
        raise ValueError("this search needs a weighted graph")


def _relax(g: Graph, costs: np.ndarray, backward: bool = False) -> np.ndarray:
    # one more hop: new[w] = min over edges (u, w) of costs[u] + c(u, w)
    src, dst = (g.targets, g.sources) if backward else (g.sources, g.targets)
    out = np.full(g.order, INF, dtype=np.int64)
    cand = costs[src] + g.edge_weights
    np.minimum.at(out, dst, cand)
    out[out >= INF] = INF
    return out


@dataclass
class HopTables:
    """``forward[j][v]``: cheapest j-hop walk source -> v; ``backward[j][v]``: v -> target."""

    forward: list[np.ndarray]
    backward: list[np.ndarray]


def _start(order: int, v: int) -> np.ndarray:
    t = np.full(order, INF, dtype=np.int64)
    t[v] = 0
    return t


def min_cost_at_hops(g: Graph, v1: int, v2: int, h: int) -> tuple[int, HopTables] | None:
    _require_weights(g)
    g.check_vertex(v1)
    g.check_vertex(v2)
    if h < 0:
        raise ValueError("hop count must be non-negative")
    fwd = [_start(g.order, v1)]
    bwd = [_start(g.order, v2)]
    for _ in range(h):
        fwd.append(_relax(g, fwd[-1]))
        bwd.append(_relax(g, bwd[-1], backward=True))
    cost = fwd[h][v2]
    if cost >= INF:
        return None
    return int(cost), HopTables(fwd, bwd)


def _optimal_walks(g: Graph, v1: int, cost: int, hops: int, tables: HopTables, limit: int) -> list[Path]:
    fwd, bwd = tables.forward, tables.backward
    out: list[Path] = []
    path = [v1]

    def extend(j: int) -> None:
        u = path[-1]
        if j == hops:
            out.append(tuple(path))
            return
        base = int(fwd[j][u])
        rest = hops - j - 1
        for w, c in zip(g.successors(u).tolist(), g.successor_weights(u).tolist()):
            if len(out) >= limit:
                return
            if base + c + int(bwd[rest][w]) == cost:
                path.append(w)
                extend(j + 1)
                path.pop()

    extend(0)
    return out


def shortest_weighted_path(g: Graph, v1: int, v2: int, max_paths: int = DEFAULT_MAX_PATHS) -> WeightedQueryResult:
    _require_weights(g)
    g.check_vertex(v1)
    g.check_vertex(v2)
    if v1 == v2:
        return WeightedQueryResult(0, 0, [(v1,)], g.scale)
    k_min = shortest_path_length(g, v1, v2)
    if k_min is None:
        return WeightedQueryResult(None, scale=g.scale)
    fwd = [_start(g.order, v1)]
    for _ in range(k_min):
        fwd.append(_relax(g, fwd[-1]))
    best, best_hops = int(fwd[k_min][v2]), k_min
    hops = k_min + 1
    while hops <= best:
        fwd.append(_relax(g, fwd[-1]))
        c = int(fwd[hops][v2])
        if c < best:
            best, best_hops = c, hops
        hops += 1
    bwd = [_start(g.order, v2)]
    for _ in range(best_hops):
        bwd.append(_relax(g, bwd[-1], backward=True))
    paths = _optimal_walks(g, v1, best, best_hops, HopTables(fwd, bwd), max_paths + 1)
    return WeightedQueryResult(best, best_hops, paths[:max_paths], g.scale, len(paths) > max_paths)


def thicken_valued(g: Graph, p: Partition, index: int = 1) -> Level:
    """Quotient whose edge weights are the cheapest generating fine edge."""
    _require_weights(g)
    edges, weights = quotient_edges(g, p, valued=True)
    return Level(Graph(p.class_count, edges, weights, scale=g.scale), p, index)


def build_valued_hierarchy(g: Graph, min_order: int = 1, partition=pair_partition) -> Hierarchy:
    _require_weights(g)
    return build_hierarchy(g, min_order, partition, thicken_fn=thicken_valued)


def _distances_to(g: Graph, target: int) -> dict[int, int]:
    dist = {target: 0}
    heap = [(0, target)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist.get(v, d):
            continue
        for u, c in zip(g.predecessors(v).tolist(), g.predecessor_weights(v).tolist()):
            nd = d + c
            if nd < dist.get(u, nd + 1):
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


def _walks_by_cost(g: Graph, source: int, target: int):
    """Yield ``(cost, walk)`` for every source -> target walk, cheapest first."""
    to_target = _distances_to(g, target)
    if source not in to_target:
        return
    tie = itertools.count()
    heap = [(to_target[source], 0, next(tie), (source,))]
    while heap:
        _, cost, _, walk = heapq.heappop(heap)
        u = walk[-1]
        if u == target:
            yield cost, walk
        for w, c in zip(g.successors(u).tolist(), g.successor_weights(u).tolist()):
            if w in to_target:
                nc = cost + c
                heapq.heappush(heap, (nc + to_target[w], nc, next(tie), walk + (w,)))


def _classes_at(h: Hierarchy, level: int) -> np.ndarray:
    """Class index at ``level`` of every level-0 vertex."""
    cls = np.arange(h.graph(0).order)
    for lv in h.levels[1:level + 1]:
        cls = np.asarray(lv.partition.class_of)[cls]
    return cls


def _cheapest_refinements(g: Graph, cls: np.ndarray, coarse: Path, fwd, bwd,
                          limit: int) -> tuple[int, list[Path]] | None:
    """Cheapest level-0 walks whose projection is ``coarse``, with their cost.

    Refining level by level and keeping every walk composes to the same set,
    so the walks are found in one pass over level 0: position j may hold only
    members of ``coarse[j]`` that are j hops from the source and k - j from the
    target. A min-cost sweep over those layers gives the cost; only walks that
    meet it are listed.
    """
    k = len(coarse) - 1
    allowed = []
    for j, c in enumerate(coarse):
        m = (cls == c) & fwd.mask(j) & bwd.mask(k - j)
        if not m.any():
            return None
        allowed.append(m)
    f = [np.where(allowed[0], 0, INF)]
    for j in range(1, k + 1):
        f.append(np.where(allowed[j], _relax(g, f[-1]), INF))
    b = [np.where(allowed[k], 0, INF)]
    for j in range(1, k + 1):
        b.append(np.where(allowed[k - j], _relax(g, b[-1], backward=True), INF))
    v1 = int(np.flatnonzero(allowed[0])[0])
    v2 = int(np.flatnonzero(allowed[k])[0])
    cost = int(f[k][v2])
    if cost >= INF:
        return None
    return cost, _optimal_walks(g, v1, cost, k, HopTables(f, b), limit)


def hierarchical_weighted_path(
    h: Hierarchy,
    v1: int,
    v2: int,
    max_paths: int = DEFAULT_MAX_PATHS,
    budget: int = DEFAULT_BUDGET,
    start_level: int | None = None,
) -> WeightedQueryResult:
    """Refine coarse walks in increasing coarse cost until none can beat the best fine cost.

    Quotient weights are minima, so a coarse walk's cost bounds from below
    the cost of every refinement, at every level on the way down.
    """
    g0 = h.graph(0)
    _require_weights(g0)
    g0.check_vertex(v1)
    g0.check_vertex(v2)
    if v1 == v2:
        return WeightedQueryResult(0, 0, [(v1,)], g0.scale)
    # coarse reachability proves nothing about fine reachability
    if shortest_path_length(g0, v1, v2) is None:
        return WeightedQueryResult(None, scale=g0.scale)
    top = choose_start_level(h) if start_level is None else start_level
    if not 0 <= top <= h.depth:
        raise IndexError(f"start level {top} outside [0, {h.depth}]")
    search = _Search(h, v1, v2, top)
    a, b = search.ends[top]
    cls = _classes_at(h, top)
    best: int | None = None
    found: list[Path] = []
    work = 0
    try:
        for coarse_cost, walk in _walks_by_cost(h.graph(top), a, b):
            if best is not None and coarse_cost > best:
                break
            work += 1
            if work > budget:
                raise BudgetExceeded(f"more than {budget} coarse candidates")
            refined = _cheapest_refinements(g0, cls, walk, search.fwd[0], search.bwd[0], max_paths + 1)
            if refined is None:
                continue
            c, paths = refined
            if best is None or c < best:
                best, found = c, paths
            elif c == best:
                found.extend(paths)
    except BudgetExceeded:
        res = shortest_weighted_path(g0, v1, v2, max_paths)
        res.fallback = True
        return res
    hops = min(len(p) for p in found) - 1
    paths = sorted(p for p in found if len(p) - 1 == hops)
    return WeightedQueryResult(best, hops, paths[:max_paths], g0.scale, len(paths) > max_paths)
