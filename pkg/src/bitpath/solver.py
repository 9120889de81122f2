from __future__ import annotations

import inspect

from .bitgraph import Graph
from .hierarchy import DEFAULT_BUDGET, Hierarchy, build_hierarchy, hierarchical_shortest_path
from .unvalued import DEFAULT_MAX_PATHS, shortest_paths
from .valued import build_valued_hierarchy, hierarchical_weighted_path, shortest_weighted_path


class NotFittedError(RuntimeError):
    pass


class ShortestPathSolver:
    """Build the hierarchy once with :meth:`fit`, then answer many queries.

    Weighted graphs are searched by cost, unweighted ones by hop count.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> ShortestPathSolver().fit(g).predict([(0, 2), (2, 0)])
    [2, None]
    """

    def __init__(self, min_order: int = 1, max_paths: int = DEFAULT_MAX_PATHS,
                 budget: int = DEFAULT_BUDGET, flat: bool = False):
        self.min_order = min_order
        self.max_paths = max_paths
        self.budget = budget
        self.flat = flat

    def get_params(self, deep: bool = True) -> dict:
        names = [p for p in inspect.signature(type(self).__init__).parameters if p != "self"]
        return {n: getattr(self, n) for n in names}

    def set_params(self, **params) -> ShortestPathSolver:
        valid = self.get_params()
        for k, v in params.items():
            if k not in valid:
                raise ValueError(f"invalid parameter {k!r} for {type(self).__name__}")
            setattr(self, k, v)
        return self

    def fit(self, graph: Graph, y=None) -> ShortestPathSolver:
        if not isinstance(graph, Graph):
            raise TypeError(f"expected a Graph, got {type(graph).__name__}")
        if self.min_order < 1:
            raise ValueError("min_order must be >= 1")
        self.graph_ = graph
        if self.flat:
            self.hierarchy_: Hierarchy | None = None
        elif graph.weighted:
            self.hierarchy_ = build_valued_hierarchy(graph, self.min_order)
        else:
            self.hierarchy_ = build_hierarchy(graph, self.min_order)
        return self

    def _check_fitted(self) -> None:
        if not hasattr(self, "graph_"):
            raise NotFittedError("call fit() before querying")

    def query(self, v1: int, v2: int):
        """Full result object (paths included) for one pair."""
        self._check_fitted()
        g, h = self.graph_, self.hierarchy_
        if g.weighted:
            if h is None:
                return shortest_weighted_path(g, v1, v2, self.max_paths)
            return hierarchical_weighted_path(h, v1, v2, self.max_paths, self.budget)
        if h is None:
            return shortest_paths(g, v1, v2, self.max_paths)
        return hierarchical_shortest_path(h, v1, v2, self.max_paths, self.budget)

    def predict(self, pairs) -> list[int | None]:
        """Distance per ``(source, target)`` pair: cost if weighted, else hop count."""
        out = []
        for v1, v2 in pairs:
            res = self.query(int(v1), int(v2))
            out.append(res.cost if self.graph_.weighted else res.hop_length)
        return out
