"""Edge-list text format, hierarchy container files and the modmul generator.

Edge-list documents are UTF-8 text. ``#`` starts a comment; the first
non-comment line holds the vertex count and every following line is
``u v`` or ``u v w`` with ``w`` a positive rational (``3``, ``3/2``, ``0.5``).
Either every edge carries a weight or none does.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import IO

import numpy as np

from .bitgraph import Graph
from .hierarchy import Hierarchy, Level, Partition
from .valued import DomainError, rationalize_weights

__all__ = [
    "ParseError",
    "parse_edge_list",
    "write_edge_list",
    "read_graph",
    "generate_modmul",
    "random_digraph",
    "hierarchy_to_dict",
    "hierarchy_from_dict",
    "save_hierarchy",
    "load_hierarchy",
]

HIERARCHY_FORMAT = "bitpath-hierarchy"
HIERARCHY_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edge_list(text: str, one_based: bool = False) -> Graph:
    order = None
    edges: list[tuple[int, int]] = []
    weights: list[Fraction] = []
    seen: dict[tuple[int, int], int] = {}
    weighted = None
    off = 1 if one_based else 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if order is None:
            if len(fields) != 1:
                raise ParseError("expected the vertex count on its own", lineno)
            try:
                order = int(fields[0])
            except ValueError:
                raise ParseError(f"bad vertex count {fields[0]!r}", lineno) from None
            if order < 1:
                raise ParseError("vertex count must be >= 1", lineno)
            continue
        if len(fields) not in (2, 3):
            raise ParseError(f"expected 'u v' or 'u v w', got {line!r}", lineno)
        try:
            u, v = int(fields[0]) - off, int(fields[1]) - off
        except ValueError:
            raise ParseError(f"bad vertex id in {line!r}", lineno) from None
        for x in (u, v):
            if not 0 <= x < order:
                raise ParseError(f"vertex {x + off} out of range for {order} vertices", lineno)
        has_w = len(fields) == 3
        if weighted is None:
            weighted = has_w
        elif weighted != has_w:
            raise ParseError("either all edges carry a weight or none does", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u + off} {v + off} (first on line {seen[(u, v)]})", lineno)
        seen[(u, v)] = lineno
        if has_w:
            try:
                w = Fraction(fields[2])
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad weight {fields[2]!r}", lineno) from None
            if w <= 0:
                raise ParseError(f"weight {fields[2]} must be strictly positive", lineno)
            weights.append(w)
        edges.append((u, v))
    if order is None:
        raise ParseError("missing vertex count")
    if weighted:
        try:
            ints, scale = rationalize_weights(weights)
        except DomainError as exc:
            raise ParseError(str(exc)) from None
        return Graph(order, edges, ints, scale=scale)
    return Graph(order, edges)


def _fmt_weight(w: int, scale: int) -> str:
    f = Fraction(w, scale)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def write_edge_list(g: Graph, one_based: bool = False) -> str:
    off = 1 if one_based else 0
    lines = [str(g.order)]
    weights = g.edge_weights
    for i, (u, v) in enumerate(g.edges()):
        if weights is None:
            lines.append(f"{u + off} {v + off}")
        else:
            lines.append(f"{u + off} {v + off} {_fmt_weight(int(weights[i]), g.scale)}")
    return "\n".join(lines) + "\n"


def read_graph(path: str, one_based: bool = False) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read(), one_based=one_based)


def generate_modmul(n: int, k: int) -> Graph:
    """Vertex ``i`` points to ``i + 1`` and to ``j * i`` for ``j = 2..k``, all mod ``n``.

    Self-loops and repeated targets are dropped.
    """
    if n < 2 or k < 1:
        raise ValueError("generate_modmul needs n >= 2 and k >= 1")
    i = np.arange(n, dtype=np.int64)
    src = [i]
    dst = [(i + 1) % n]
    for j in range(2, k + 1):
        src.append(i)
        dst.append((j * i) % n)
    edges = np.stack([np.concatenate(src), np.concatenate(dst)], axis=1)
    edges = edges[edges[:, 0] != edges[:, 1]]
    edges = np.unique(edges, axis=0)
    return Graph(n, edges)


def random_digraph(n: int, p: float, rng: np.random.Generator, max_weight: int | None = None,
                   self_loops: bool = False) -> Graph:
    """Erdos-Renyi style digraph; weights uniform in ``1..max_weight`` when given."""
    m = rng.random((n, n)) < p
    if not self_loops:
        np.fill_diagonal(m, False)
    edges = np.argwhere(m)
    if max_weight is None:
        return Graph(n, edges)
    return Graph(n, edges, rng.integers(1, max_weight + 1, size=edges.shape[0]))


def hierarchy_to_dict(h: Hierarchy) -> dict:
    levels = []
    for lv in h.levels:
        g = lv.graph
        edges = [list(e) for e in g.edges()]
        if g.weighted:
            edges = [e + [int(w)] for e, w in zip(edges, g.edge_weights.tolist())]
        levels.append({
            "order": g.order,
            "edges": edges,
            "class_of": None if lv.partition is None else list(lv.partition.class_of),
        })
    return {
        "format": HIERARCHY_FORMAT,
        "version": HIERARCHY_VERSION,
        "weighted": h.valued,
        "scale": h.graph(0).scale,
        "levels": levels,
    }


def hierarchy_from_dict(doc: dict) -> Hierarchy:
    if doc.get("format") != HIERARCHY_FORMAT:
        raise ParseError(f"not a {HIERARCHY_FORMAT} document")
    if doc.get("version") != HIERARCHY_VERSION:
        raise ParseError(f"unsupported hierarchy version {doc.get('version')!r}")
    weighted = bool(doc["weighted"])
    scale = int(doc.get("scale", 1))
    levels = []
    for i, item in enumerate(doc["levels"]):
        edges = item["edges"]
        if weighted:
            g = Graph(item["order"], [e[:2] for e in edges], [e[2] for e in edges], scale=scale)
        else:
            g = Graph(item["order"], edges)
        cls = item["class_of"]
        part = None if cls is None else Partition.from_class_of(cls)
        levels.append(Level(g, part, i))
    return Hierarchy(levels)


def save_hierarchy(h: Hierarchy, fh: IO[str]) -> None:
    json.dump(hierarchy_to_dict(h), fh, separators=(",", ":"))
    fh.write("\n")


def load_hierarchy(fh: IO[str]) -> Hierarchy:
    try:
        doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"hierarchy file is not valid JSON: {exc}") from None
    return hierarchy_from_dict(doc)
