"""Reference answers for testing: BFS, Dijkstra and exhaustive walk listing.

Nothing here touches edge forms or the CSR arrays; each oracle rebuilds a
plain dict-of-lists adjacency from the graph's edge list, so agreement with
the bit-row searches is independent evidence.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .bitgraph import Graph, Path

__all__ = [
    "OracleOverflow",
    "OracleReport",
    "adjacency",
    "bfs_distance",
    "dijkstra_distance",
    "brute_force_walks",
    "brute_force_shortest_paths",
    "walk_endpoints",
    "walk_endpoint_table",
]

DEFAULT_CAP = 100_000


class OracleOverflow(RuntimeError):
    """More walks than the oracle's hard cap; never silently truncated."""


@dataclass
class OracleReport:
    instance: str
    source: int
    target: int
    expected: object
    actual: object

    @property
    def match(self) -> bool:
        return self.expected == self.actual


def adjacency(g: Graph) -> dict[int, list[tuple[int, int]]]:
    """``{u: [(w, weight), ...]}`` with neighbours ascending; weight 1 when unweighted."""
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.order)}
    weights = g.weights
    for u, w in g.edges():
        adj[u].append((w, 1 if weights is None else weights[(u, w)]))
    for lst in adj.values():
        lst.sort()
    return adj


def _check(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.order:
            raise IndexError(f"vertex {v} out of range [0, {g.order})")


def bfs_distance(g: Graph, v1: int, v2: int, adj=None) -> int | None:
    _check(g, v1, v2)
    adj = adjacency(g) if adj is None else adj
    dist = {v1: 0}
    queue = deque([v1])
    while queue:
        u = queue.popleft()
        if u == v2:
            return dist[u]
        for w, _ in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return None


def dijkstra_distance(g: Graph, v1: int, v2: int) -> int | None:
    if not g.weighted:
        raise ValueError("dijkstra_distance needs a weighted graph")
    _check(g, v1, v2)
    adj = adjacency(g)
    dist = {v1: 0}
    heap = [(0, v1)]
    done = set()
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        if u == v2:
            return d
        done.add(u)
        for w, c in adj[u]:
            if w not in done and d + c < dist.get(w, d + c + 1):
                dist[w] = d + c
                heapq.heappush(heap, (d + c, w))
    return None


def brute_force_walks(g: Graph, v1: int, v2: int, exact_hops: int, cap: int = DEFAULT_CAP) -> list[Path]:
    """Every walk of exactly ``exact_hops`` hops, lexicographic. Raises past ``cap``."""
    _check(g, v1, v2)
    if exact_hops < 0:
        raise ValueError("exact_hops must be non-negative")
    adj = adjacency(g)
    dead: set[tuple[int, int]] = set()
    out: list[Path] = []
    walk = [v1]

    def expand(u: int, left: int) -> bool:
        if left == 0:
            if u != v2:
                return False
            if len(out) >= cap:
                raise OracleOverflow(f"more than {cap} walks")
            out.append(tuple(walk))
            return True
        if (u, left) in dead:
            return False
        hit = False
        for w, _ in adj[u]:
            walk.append(w)
            hit |= expand(w, left - 1)
            walk.pop()
        if not hit:
            dead.add((u, left))
        return hit

    expand(v1, exact_hops)
    return out


def brute_force_shortest_paths(g: Graph, v1: int, v2: int, cap: int = DEFAULT_CAP) -> list[Path]:
    d = bfs_distance(g, v1, v2)
    return [] if d is None else brute_force_walks(g, v1, v2, d, cap)


def walk_endpoints(g: Graph, v: int, k: int) -> frozenset[int]:
    """Vertices reachable from ``v`` by a walk of exactly ``k`` hops."""
    _check(g, v)
    adj = adjacency(g)

    @lru_cache(maxsize=None)
    def ends(u: int, left: int) -> frozenset[int]:
        if left == 0:
            return frozenset((u,))
        acc: set[int] = set()
        for w, _ in adj[u]:
            acc |= ends(w, left - 1)
        return frozenset(acc)

    return ends(v, k)


def walk_endpoint_table(g: Graph, max_hops: int) -> list[list[frozenset[int]]]:
    """``table[k][v]``: the set :func:`walk_endpoints` returns, for all k <= max_hops."""
    adj = adjacency(g)
    table = [[frozenset((v,)) for v in range(g.order)]]
    for _ in range(max_hops):
        prev = table[-1]
        table.append([frozenset().union(*(prev[w] for w, _ in adj[u])) for u in range(g.order)])
    return table
