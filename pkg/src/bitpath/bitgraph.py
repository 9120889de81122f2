"""Bit-row representation of directed graphs.

A vertex set is an :class:`EdgeForm`: a fixed-length row of bits packed into
64-bit words. A :class:`Graph` exposes, for every vertex ``v``, its outgoing
form (the successors of ``v``) and its incoming form (the predecessors of
``v``). Adjacency is kept as two CSR arrays so that graphs with 10^5 vertices
do not need a dense V x V bit matrix; rows are materialised on demand.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "DimensionError",
    "EdgeForm",
    "Graph",
    "Path",
    "or_law",
    "and_law",
    "support",
    "vertex_form",
    "step_forward",
    "step_backward",
    "advance",
]

Path = tuple[int, ...]

_WORD = 64


class DimensionError(ValueError):
    """Raised when two edge forms (or a form and a graph) disagree in length."""


class EdgeForm:
    """An immutable V-bit row; bit ``i`` set means vertex ``i`` is in the set."""

    __slots__ = ("_words", "_length")

    def __init__(self, words: np.ndarray, length: int):
        words = np.ascontiguousarray(words, dtype=np.uint64)
        if words.shape != (-(-length // _WORD),):
            raise DimensionError(f"{words.shape[0]} words cannot hold {length} bits")
        words.flags.writeable = False
        self._words = words
        self._length = int(length)

    @classmethod
    def from_mask(cls, mask) -> EdgeForm:
        mask = np.asarray(mask, dtype=bool)
        n = mask.shape[0]
        packed = np.packbits(mask, bitorder="little")
        padded = np.zeros(-(-n // _WORD) * 8, dtype=np.uint8)
        padded[: packed.shape[0]] = packed
        return cls(padded.view("<u8"), n)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> EdgeForm:
        return cls.from_mask(np.fromiter((int(b) != 0 for b in bits), dtype=bool))

    @classmethod
    def from_indices(cls, indices, length: int) -> EdgeForm:
        mask = np.zeros(length, dtype=bool)
        idx = np.asarray(indices, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= length):
            raise IndexError(f"vertex index out of range [0, {length})")
        mask[idx] = True
        return cls.from_mask(mask)

    @classmethod
    def zeros(cls, length: int) -> EdgeForm:
        return cls(np.zeros(-(-length // _WORD), dtype=np.uint64), length)

    @property
    def words(self) -> np.ndarray:
        return self._words

    def __len__(self) -> int:
        return self._length

    def mask(self) -> np.ndarray:
        """Unpacked boolean view, one entry per vertex."""
        return np.unpackbits(
            self._words.view(np.uint8), count=self._length, bitorder="little"
        ).astype(bool)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(int(b) for b in self.mask())

    def support(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.mask()))

    def count(self) -> int:
        return int(np.unpackbits(self._words.view(np.uint8)).sum())

    def _check(self, other: EdgeForm) -> None:
        if not isinstance(other, EdgeForm):
            raise TypeError(f"expected EdgeForm, got {type(other).__name__}")
        if other._length != self._length:
            raise DimensionError(
                f"edge forms of length {self._length} and {other._length}"
            )

    def __or__(self, other: EdgeForm) -> EdgeForm:
        self._check(other)
        return EdgeForm(self._words | other._words, self._length)

    def __and__(self, other: EdgeForm) -> EdgeForm:
        self._check(other)
        return EdgeForm(self._words & other._words, self._length)

    def issubset(self, other: EdgeForm) -> bool:
        self._check(other)
        return not np.any(self._words & ~other._words)

    def __le__(self, other: EdgeForm) -> bool:
        return self.issubset(other)

    def __bool__(self) -> bool:
        return bool(self._words.any())

    def __contains__(self, v: int) -> bool:
        if not 0 <= v < self._length:
            return False
        return bool((int(self._words[v // _WORD]) >> (v % _WORD)) & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeForm):
            return NotImplemented
        return self._length == other._length and np.array_equal(
            self._words, other._words
        )

    def __hash__(self) -> int:
        return hash((self._length, self._words.tobytes()))

    def __repr__(self) -> str:
        if self._length <= 64:
            return f"EdgeForm({''.join(map(str, self.bits))})"
        return f"EdgeForm(length={self._length}, count={self.count()})"


def or_law(a: EdgeForm, b: EdgeForm) -> EdgeForm:
    return a | b


def and_law(a: EdgeForm, b: EdgeForm) -> EdgeForm:
    return a & b


def support(e: EdgeForm) -> tuple[int, ...]:
    return e.support()


def vertex_form(v: int, length: int) -> EdgeForm:
    """Indicator form of a single vertex (the dual basis vector)."""
    if not 0 <= v < length:
        raise IndexError(f"vertex {v} out of range [0, {length})")
    return EdgeForm.from_indices([v], length)


class Graph:
    """Immutable directed graph with optional positive integer edge weights.

    ``scale`` records the common denominator that was applied when rational
    weights were converted to integers (1 for integer-weighted or unweighted
    graphs).
    """

    def __init__(
        self,
        order: int,
        edges: Iterable[Sequence[int]] | np.ndarray = (),
        weights: Sequence[int] | np.ndarray | None = None,
        scale: int = 1,
    ):
        order = int(order)
        if order < 1:
            raise ValueError("a graph needs at least one vertex")
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                         dtype=np.int64).reshape(-1, 2)
        if arr.size and (arr.min() < 0 or arr.max() >= order):
            raise IndexError(f"edge endpoint out of range [0, {order})")
        w = None
        if weights is not None:
            w = np.asarray(weights, dtype=np.int64).reshape(-1)
            if w.shape[0] != arr.shape[0]:
                raise ValueError("one weight per edge is required")
            if w.size and w.min() < 1:
                raise ValueError("edge weights must be integers >= 1")
        if scale < 1:
            raise ValueError("scale must be a positive integer")

        perm = np.lexsort((arr[:, 1], arr[:, 0]))
        src, dst = arr[perm, 0], arr[perm, 1]
        if src.size > 1:
            dup = (src[1:] == src[:-1]) & (dst[1:] == dst[:-1])
            if dup.any():
                i = int(np.flatnonzero(dup)[0])
                raise ValueError(f"duplicate edge ({src[i]}, {dst[i]})")
        self._order = order
        self._src = src
        self._dst = dst
        self._weights = None if w is None else w[perm]
        self._scale = int(scale)
        self._out_ptr = np.concatenate(([0], np.cumsum(np.bincount(src, minlength=order))))
        inv = np.lexsort((src, dst))
        self._in_src = src[inv]
        self._in_dst = dst[inv]
        self._in_weights = None if w is None else self._weights[inv]
        self._in_ptr = np.concatenate(([0], np.cumsum(np.bincount(dst, minlength=order))))
        for a in (self._src, self._dst, self._out_ptr, self._in_src, self._in_dst, self._in_ptr):
            a.flags.writeable = False
        # per-vertex Python views, filled lazily; writes are idempotent
        self._succ_lists: dict[int, list[int]] = {}
        self._succ_sets: dict[int, frozenset[int]] = {}

    @classmethod
    def from_adjacency(cls, matrix) -> Graph:
        m = np.asarray(matrix) != 0
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError("adjacency matrix must be square")
        return cls(m.shape[0], np.argwhere(m))

    @classmethod
    def from_weight_map(cls, order: int, weights: Mapping[tuple[int, int], int], scale: int = 1) -> Graph:
        items = sorted(weights.items())
        return cls(order, [e for e, _ in items], [w for _, w in items], scale=scale)

    @property
    def order(self) -> int:
        return self._order

    @property
    def edge_count(self) -> int:
        return int(self._src.shape[0])

    @property
    def weighted(self) -> bool:
        return self._weights is not None

    @property
    def scale(self) -> int:
        return self._scale

    @property
    def sources(self) -> np.ndarray:
        return self._src

    @property
    def targets(self) -> np.ndarray:
        return self._dst

    @property
    def edge_weights(self) -> np.ndarray | None:
        return self._weights

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self._src.tolist(), self._dst.tolist()))

    @property
    def weights(self) -> dict[tuple[int, int], int] | None:
        if self._weights is None:
            return None
        return dict(zip(self.edges(), self._weights.tolist()))

    def successors(self, v: int) -> np.ndarray:
        return self._dst[self._out_ptr[v] : self._out_ptr[v + 1]]

    def predecessors(self, v: int) -> np.ndarray:
        return self._in_src[self._in_ptr[v] : self._in_ptr[v + 1]]

    def successor_weights(self, v: int) -> np.ndarray:
        return self._weights[self._out_ptr[v] : self._out_ptr[v + 1]]

    def predecessor_weights(self, v: int) -> np.ndarray:
        return self._in_weights[self._in_ptr[v] : self._in_ptr[v + 1]]

    def successor_list(self, v: int) -> list[int]:
        row = self._succ_lists.get(v)
        if row is None:
            row = self._succ_lists[v] = self.successors(v).tolist()
        return row

    def has_edge(self, u: int, w: int) -> bool:
        row = self._succ_sets.get(u)
        if row is None:
            row = self._succ_sets[u] = frozenset(self.successor_list(u))
        return w in row

    def weight(self, u: int, w: int) -> int:
        if self._weights is None:
            raise ValueError("graph is not weighted")
        lo = int(self._out_ptr[u])
        row = self._dst[lo : self._out_ptr[u + 1]]
        i = int(np.searchsorted(row, w))
        if i >= row.shape[0] or int(row[i]) != w:
            raise KeyError((u, w))
        return int(self._weights[lo + i])

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self._order:
            raise IndexError(f"vertex {v} out of range [0, {self._order})")
        return int(v)

    def out_form(self, v: int) -> EdgeForm:
        """The outgoing row o_v."""
        self.check_vertex(v)
        return EdgeForm.from_indices(self.successors(v), self._order)

    def in_form(self, v: int) -> EdgeForm:
        """The incoming row i_v."""
        self.check_vertex(v)
        return EdgeForm.from_indices(self.predecessors(v), self._order)

    @property
    def outgoing(self) -> tuple[EdgeForm, ...]:
        return tuple(self.out_form(v) for v in range(self._order))

    @property
    def incoming(self) -> tuple[EdgeForm, ...]:
        return tuple(self.in_form(v) for v in range(self._order))

    def transpose(self) -> Graph:
        return Graph(
            self._order,
            np.stack([self._dst, self._src], axis=1),
            self._weights,
            scale=self._scale,
        )

    def unweighted(self) -> Graph:
        if self._weights is None:
            return self
        return Graph(self._order, np.stack([self._src, self._dst], axis=1))

    def path_cost(self, path: Sequence[int]) -> int:
        if self._weights is None:
            return len(path) - 1
        return sum(self.weight(u, w) for u, w in zip(path, path[1:]))

    def is_path(self, path: Sequence[int]) -> bool:
        return len(path) > 0 and all(self.has_edge(u, w) for u, w in zip(path, path[1:]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if (self._order, self._scale, self.weighted) != (other._order, other._scale, other.weighted):
            return False
        same = np.array_equal(self._src, other._src) and np.array_equal(self._dst, other._dst)
        if same and self.weighted:
            same = np.array_equal(self._weights, other._weights)
        return same

    __hash__ = None

    def __repr__(self) -> str:
        kind = "weighted " if self.weighted else ""
        return f"<{kind}Graph order={self._order} edges={self.edge_count}>"


def _check_form(g: Graph, e: EdgeForm) -> None:
    if len(e) != g.order:
        raise DimensionError(f"form of length {len(e)} on a graph of order {g.order}")


# Below this many support vertices, rows are gathered one by one; above it a
# single pass over the edge arrays is cheaper.
_ROW_GATHER_LIMIT = 64


def _step(g: Graph, e: EdgeForm, ptr: np.ndarray, col: np.ndarray, key: np.ndarray) -> EdgeForm:
    _check_form(g, e)
    mask = e.mask()
    out = np.zeros(g.order, dtype=bool)
    rows = np.flatnonzero(mask)
    if rows.shape[0] <= _ROW_GATHER_LIMIT:
        for v in rows:
            out[col[ptr[v] : ptr[v + 1]]] = True
    else:
        out[col[mask[key]]] = True
    return EdgeForm.from_mask(out)


def step_forward(g: Graph, e: EdgeForm) -> EdgeForm:
    """``e + 1``: the union of the outgoing rows of every vertex in ``e``."""
    return _step(g, e, g._out_ptr, g._dst, g._src)


def step_backward(g: Graph, e: EdgeForm) -> EdgeForm:
    """``e - 1``: the union of the incoming rows of every vertex in ``e``."""
    return _step(g, e, g._in_ptr, g._in_src, g._in_dst)


def advance(g: Graph, e: EdgeForm, k: int, direction: str = "forward") -> EdgeForm:
    if k < 0:
        raise ValueError("k must be non-negative")
    if direction == "forward":
        step = step_forward
    elif direction == "backward":
        step = step_backward
    else:
        raise ValueError(f"unknown direction {direction!r}")
    _check_form(g, e)
    for _ in range(k):
        e = step(g, e)
    return e
