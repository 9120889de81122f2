"""Flat shortest-path search on unvalued graphs.

The hop distance is found by growing the exact-k frontier ``v1 + k`` until it
contains ``v2``. The layers ``(v1 + j) & (v2 - (k - j))`` then hold exactly
the vertices sitting at position ``j`` of some k-hop walk, and a depth-first
reading of those layers lists the walks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .bitgraph import EdgeForm, Graph, Path, step_backward, step_forward, vertex_form

__all__ = [
    "DEFAULT_MAX_PATHS",
    "LayerMeet",
    "QueryResult",
    "shortest_path_length",
    "forward_layers",
    "meet_layers",
    "enumerate_paths",
    "iter_layer_paths",
    "shortest_paths",
    "format_path",
]

DEFAULT_MAX_PATHS = 1024


@dataclass(frozen=True)
class LayerMeet:
    source: int
    target: int
    k: int
    layers: tuple[EdgeForm, ...]
    feasible: bool


@dataclass
class QueryResult:
    hop_length: int | None
    paths: list[Path] = field(default_factory=list)
    truncated: bool = False
    path_count_found: int = 0
    fallback: bool = False

    @property
    def found(self) -> bool:
        return self.hop_length is not None


def forward_layers(g: Graph, v1: int, v2: int) -> tuple[int | None, list[EdgeForm]]:
    """Exact-k frontiers from ``v1`` up to the first one containing ``v2``.

    Stops with ``None`` once the ball of radius k stops growing: a frontier
    sequence can cycle forever (a 2-cycle alternates), the ball cannot.
    """
    g.check_vertex(v1)
    g.check_vertex(v2)
    frontier = vertex_form(v1, g.order)
    layers = [frontier]
    if v1 == v2:
        return 0, layers
    ball = frontier
    while True:
        frontier = step_forward(g, frontier)
        layers.append(frontier)
        if v2 in frontier:
            return len(layers) - 1, layers
        grown = ball | frontier
        if grown == ball:
            return None, layers
        ball = grown


def shortest_path_length(g: Graph, v1: int, v2: int) -> int | None:
    return forward_layers(g, v1, v2)[0]


def _meet(g: Graph, v1: int, v2: int, fwd: Sequence[EdgeForm], k: int) -> LayerMeet:
    res: list[EdgeForm] = [None] * (k + 1)  # type: ignore[list-item]
    back = vertex_form(v2, g.order)
    for j in range(k, -1, -1):
        if j < k:
            back = step_backward(g, back)
        layer = fwd[j] & back
        if not layer:
            # a single empty layer rules out every k-hop walk
            return LayerMeet(v1, v2, k, (), False)
        res[j] = layer
    return LayerMeet(v1, v2, k, tuple(res), True)


def meet_layers(g: Graph, v1: int, v2: int, k: int) -> LayerMeet:
    if k < 0:
        raise ValueError("k must be non-negative")
    g.check_vertex(v1)
    g.check_vertex(v2)
    fwd = [vertex_form(v1, g.order)]
    for _ in range(k):
        fwd.append(step_forward(g, fwd[-1]))
    return _meet(g, v1, v2, fwd, k)


def iter_layer_paths(g: Graph, layers: Sequence[EdgeForm]) -> Iterator[Path]:
    """Depth-first reading of per-position candidate sets.

    Yields, in lexicographic order, every walk ``p`` with ``p[j]`` in
    ``layers[j]`` whose consecutive pairs are edges of ``g``.
    """
    return _iter_paths(g, [set(layer.support()) for layer in layers])


def _iter_paths(g: Graph, allowed: Sequence[set[int]]) -> Iterator[Path]:
    if not allowed:
        return
    last = len(allowed) - 1
    path: list[int] = []
    stack = [iter(sorted(allowed[0]))]
    while stack:
        h = next(stack[-1], None)
        if h is None:
            stack.pop()
            if path:
                path.pop()
            continue
        path.append(h)
        depth = len(path) - 1
        if depth == last:
            if not g.is_path(path):
                raise AssertionError(f"layer reading produced a non-path {path}")
            yield tuple(path)
            path.pop()
            continue
        nxt = allowed[depth + 1]
        # narrow the next layer to the successors of h
        stack.append(iter([w for w in g.successor_list(h) if w in nxt]))


def enumerate_paths(g: Graph, meet: LayerMeet, max_paths: int = DEFAULT_MAX_PATHS) -> list[Path]:
    if not meet.feasible:
        raise ValueError("cannot enumerate paths of an infeasible layer meet")
    out = []
    for p in iter_layer_paths(g, meet.layers):
        if len(out) >= max_paths:
            break
        out.append(p)
    return out


def shortest_paths(g: Graph, v1: int, v2: int, max_paths: int = DEFAULT_MAX_PATHS) -> QueryResult:
    k, fwd = forward_layers(g, v1, v2)
    if k is None:
        return QueryResult(None)
    meet = _meet(g, v1, v2, fwd, k)
    paths = enumerate_paths(g, meet, max_paths + 1)
    truncated = len(paths) > max_paths
    return QueryResult(k, paths[:max_paths], truncated, len(paths))


def format_path(p: Sequence[int], one_based: bool = False) -> str:
    if len(p) == 0:
        raise ValueError("cannot format an empty path")
    off = 1 if one_based else 0
    return "->".join(str(v + off) for v in p)
