"""Multilevel (coarsen-then-refine) shortest paths.

A :class:`Hierarchy` is a chain of quotient graphs. Level ``i + 1`` is built
from level ``i`` by merging vertices into classes; a class has an edge to
another (possibly itself) when any of its members has an edge to a member of
the other. Every fine path projects to a coarse path of the same hop length,
so a fine shortest path can be searched for among the refinements of coarse
paths, level by level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import numpy as np

from .bitgraph import EdgeForm, Graph, Path, step_backward, step_forward, vertex_form
from .unvalued import DEFAULT_MAX_PATHS, QueryResult, _iter_paths, shortest_paths

__all__ = [
    "DEFAULT_BUDGET",
    "Partition",
    "Level",
    "Hierarchy",
    "BudgetExceeded",
    "pair_partition",
    "thicken",
    "build_hierarchy",
    "dumb_refinement",
    "refine_path",
    "collision_probability",
    "choose_start_level",
    "hierarchical_shortest_path",
]

DEFAULT_BUDGET = 4096


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Partition:
    class_of: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    @classmethod
    def from_class_of(cls, class_of: Sequence[int]) -> Partition:
        class_of = tuple(int(c) for c in class_of)
        if not class_of:
            raise ValueError("partition of an empty vertex set")
        count = max(class_of) + 1
        members: list[list[int]] = [[] for _ in range(count)]
        for v, c in enumerate(class_of):
            if c < 0:
                raise ValueError(f"negative class id for vertex {v}")
            members[c].append(v)
        if any(not m for m in members):
            raise ValueError("class ids must be contiguous: some class is empty")
        return cls(class_of, tuple(tuple(m) for m in members))

    @property
    def class_count(self) -> int:
        return len(self.members)

    @property
    def order(self) -> int:
        return len(self.class_of)


def pair_partition(order: int) -> Partition:
    """Consecutive pairs ``{2i, 2i+1}``; an odd last vertex stays alone."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return Partition.from_class_of([v // 2 for v in range(order)])


@dataclass(frozen=True)
class Level:
    graph: Graph
    partition: Partition | None
    index: int


def quotient_edges(g: Graph, p: Partition, valued: bool = False):
    """Edges of ``g / p``; with ``valued`` also the minimum weight per coarse edge."""
    if p.order != g.order:
        raise ValueError(f"partition covers {p.order} vertices, graph has {g.order}")
    cls = np.asarray(p.class_of, dtype=np.int64)
    cs, cd = cls[g.sources], cls[g.targets]
    if not valued:
        pairs = np.unique(np.stack([cs, cd], axis=1), axis=0) if cs.size else np.empty((0, 2), np.int64)
        return pairs, None
    if not g.weighted:
        raise ValueError("valued thickening needs a weighted graph")
    if cs.size == 0:
        return np.empty((0, 2), np.int64), np.empty(0, np.int64)
    order = np.lexsort((g.edge_weights, cd, cs))
    cs, cd, w = cs[order], cd[order], g.edge_weights[order]
    first = np.ones(cs.shape[0], dtype=bool)
    first[1:] = (cs[1:] != cs[:-1]) | (cd[1:] != cd[:-1])
    return np.stack([cs[first], cd[first]], axis=1), w[first]


def thicken(g: Graph, p: Partition, index: int = 1) -> Level:
    edges, _ = quotient_edges(g, p)
    return Level(Graph(p.class_count, edges), p, index)


class Hierarchy:
    """Level 0 is the input graph; each later level is a quotient of the one before."""

    def __init__(self, levels: Sequence[Level]):
        if not levels:
            raise ValueError("a hierarchy needs at least one level")
        for i, lv in enumerate(levels):
            if lv.index != i:
                raise ValueError(f"level {i} carries index {lv.index}")
            if i == 0:
                continue
            if lv.partition is None:
                raise ValueError(f"level {i} has no partition")
            prev = levels[i - 1].graph
            if lv.partition.order != prev.order or lv.partition.class_count != lv.graph.order:
                raise ValueError(f"level {i} partition does not match its neighbours")
        self.levels = tuple(levels)

    def __len__(self) -> int:
        return len(self.levels)

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @property
    def valued(self) -> bool:
        return self.levels[0].graph.weighted

    def graph(self, level: int) -> Graph:
        return self.levels[level].graph

    def class_at(self, v: int, level: int) -> int:
        """The class containing fine vertex ``v`` at ``level``."""
        self.graph(0).check_vertex(v)
        for lv in self.levels[1 : level + 1]:
            v = lv.partition.class_of[v]
        return v

    def project(self, path: Sequence[int], level: int, start: int = 0) -> Path:
        """Map a path at level ``start`` to its class sequence at ``level``."""
        out = list(path)
        for lv in self.levels[start + 1 : level + 1]:
            out = [lv.partition.class_of[v] for v in out]
        return tuple(out)


def build_hierarchy(
    g: Graph,
    min_order: int = 1,
    partition: Callable[[int], Partition] = pair_partition,
    thicken_fn: Callable[[Graph, Partition, int], Level] | None = None,
) -> Hierarchy:
    if min_order < 1:
        raise ValueError("min_order must be >= 1")
    thicken_fn = thicken_fn or thicken
    levels = [Level(g, None, 0)]
    while levels[-1].graph.order > min_order:
        cur = levels[-1].graph
        p = partition(cur.order)
        if p.class_count >= cur.order:
            break
        levels.append(thicken_fn(cur, p, len(levels)))
    return Hierarchy(levels)


def dumb_refinement(level: Level, coarse: int) -> EdgeForm:
    """Indicator form, on the next finer level, of the members of a coarse vertex."""
    if level.partition is None:
        raise ValueError("level 0 has no finer level")
    level.graph.check_vertex(coarse)
    return EdgeForm.from_indices(level.partition.members[coarse], level.partition.order)


class LayerCache:
    """Exact-j frontiers from one vertex, extended on demand."""

    def __init__(self, g: Graph, start: int, backward: bool = False):
        self.graph = g
        self._step = step_backward if backward else step_forward
        first = vertex_form(start, g.order)
        self.forms = [first]
        self.masks = [first.mask()]

    def form(self, j: int) -> EdgeForm:
        while len(self.forms) <= j:
            nxt = self._step(self.graph, self.forms[-1])
            self.forms.append(nxt)
            self.masks.append(nxt.mask())
        return self.forms[j]

    def mask(self, j: int) -> np.ndarray:
        self.form(j)
        return self.masks[j]


def _refine(
    members: Sequence[Sequence[int]],
    fine: Graph,
    coarse_path: Sequence[int],
    fwd: LayerCache,
    bwd: LayerCache,
) -> Iterator[Path]:
    # Res[j] = dumb(coarse[j]) & (v1 + j) & (v2 - (k - j)), intersected on the
    # member list since a dumb refinement has at most a handful of bits.
    k = len(coarse_path) - 1
    allowed = []
    for j, c in enumerate(coarse_path):
        fm, bm = fwd.mask(j), bwd.mask(k - j)
        layer = {m for m in members[c] if fm[m] and bm[m]}
        if not layer:
            return iter(())
        allowed.append(layer)
    return _iter_paths(fine, allowed)


def refine_path(
    h: Hierarchy,
    level_index: int,
    coarse_path: Sequence[int],
    v1: int,
    v2: int,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> list[Path]:
    """All paths one level finer whose class sequence equals ``coarse_path``.

    ``v1`` and ``v2`` are vertices of level ``level_index - 1``. Returns an
    empty list when the coarse path has no refinement.
    """
    if not 1 <= level_index <= h.depth:
        raise IndexError(f"level {level_index} has no finer level")
    lv = h.levels[level_index]
    fine = h.graph(level_index - 1)
    fine.check_vertex(v1)
    fine.check_vertex(v2)
    if not coarse_path or not lv.graph.is_path(coarse_path):
        raise ValueError(f"{tuple(coarse_path)} is not a path at level {level_index}")
    cls = lv.partition.class_of
    if cls[v1] != coarse_path[0] or cls[v2] != coarse_path[-1]:
        raise ValueError("endpoint classes do not match the coarse path")
    fwd, bwd = LayerCache(fine, v1), LayerCache(fine, v2, backward=True)
    return list(itertools.islice(_refine(lv.partition.members, fine, coarse_path, fwd, bwd), max_paths))


def collision_probability(edges: int, order: int) -> float:
    """Estimated chance that two vertices of a level share a successor."""
    d = edges / order**2
    return 2 * d - d * d


def choose_start_level(h: Hierarchy) -> int:
    best = 0
    for i, lv in enumerate(h.levels):
        if collision_probability(lv.graph.edge_count, lv.graph.order) < 0.5:
            best = i
    return best


class _Search:
    """Per-query state: endpoint classes and frontier caches at every level."""

    def __init__(self, h: Hierarchy, v1: int, v2: int, top: int):
        self.h = h
        self.ends = [(h.class_at(v1, l), h.class_at(v2, l)) for l in range(top + 1)]
        self.fwd = [LayerCache(h.graph(l), a) for l, (a, _) in enumerate(self.ends)]
        self.bwd = [LayerCache(h.graph(l), b, backward=True) for l, (_, b) in enumerate(self.ends)]

    def coarse_candidates(self, level: int, k: int) -> Iterator[Path]:
        allowed = []
        fwd, bwd = self.fwd[level], self.bwd[level]
        for j in range(k + 1):
            layer = fwd.form(j) & bwd.form(k - j)
            if not layer:
                return iter(())
            allowed.append(set(layer.support()))
        return _iter_paths(self.h.graph(level), allowed)

    def refine(self, level: int, coarse_path: Path) -> Iterator[Path]:
        """Refinements of a level-``level`` path on level ``level - 1``."""
        lv = self.h.levels[level]
        return _refine(lv.partition.members, self.h.graph(level - 1), coarse_path,
                       self.fwd[level - 1], self.bwd[level - 1])

    def refine_down(self, level: int, candidates: Sequence[Path], budget: int) -> list[Path]:
        for l in range(level, 0, -1):
            nxt: list[Path] = []
            for c in candidates:
                nxt.extend(self.refine(l, c))
                if l > 1 and len(nxt) > budget:
                    raise BudgetExceeded(f"{len(nxt)} candidates at level {l - 1}")
            candidates = nxt
            if not candidates:
                break
        return list(candidates)


def hierarchical_shortest_path(
    h: Hierarchy,
    v1: int,
    v2: int,
    max_paths: int = DEFAULT_MAX_PATHS,
    budget: int = DEFAULT_BUDGET,
    start_level: int | None = None,
) -> QueryResult:
    """Shortest paths found by refining coarse paths of increasing hop length.

    For k = 1, 2, ... every k-hop path between the endpoint classes at the
    start level is refined down to level 0; the first k that leaves a fine
    path is the distance. When more than ``budget`` candidates appear at one
    level the query is answered by the flat search instead and the result is
    flagged with ``fallback``.
    """
    g0 = h.graph(0)
    g0.check_vertex(v1)
    g0.check_vertex(v2)
    if v1 == v2:
        return QueryResult(0, [(v1,)], False, 1)
    top = choose_start_level(h) if start_level is None else start_level
    if not 0 <= top <= h.depth:
        raise IndexError(f"start level {top} outside [0, {h.depth}]")
    search = _Search(h, v1, v2, top)
    fine = search.fwd[0]
    ball = fine.form(0)
    for k in itertools.count(1):
        try:
            if top == 0:
                found = list(itertools.islice(search.coarse_candidates(0, k), max_paths + 1))
            else:
                cands = list(itertools.islice(search.coarse_candidates(top, k), budget + 1))
                if len(cands) > budget:
                    raise BudgetExceeded(f"{len(cands)} candidates at level {top}")
                found = search.refine_down(top, cands, budget)
        except BudgetExceeded:
            res = shortest_paths(g0, v1, v2, max_paths)
            res.fallback = True
            return res
        if found:
            found.sort()
            return QueryResult(k, found[:max_paths], len(found) > max_paths, len(found))
        # coarse paths always exist when fine ones do, so the fine ball is
        # the only sound stopping test
        grown = ball | fine.form(k)
        if grown == ball:
            return QueryResult(None)
        ball = grown
    raise AssertionError("unreachable")
