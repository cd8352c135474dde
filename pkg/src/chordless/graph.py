"""Immutable undirected simple graphs with constant-time adjacency tests.

A :class:`Graph` keeps two views of the same edge set:

* a bit-packed ``n x n`` adjacency matrix (``n * ceil(n / 8)`` bytes), used for
  O(1) chord tests;
* CSR adjacency lists (``indptr``/``indices``) sorted ascending by vertex index,
  which fixes the iteration order of every algorithm in the package.

Vertices are dense integers ``0 .. n-1``; external labels live in ``names``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

__all__ = ["Graph", "GraphError", "build_graph", "drop_isolated", "DEFAULT_MAX_VERTICES"]

#: Default cap on ``n``. The packed matrix for 100,000 vertices takes ~1.25 GB.
DEFAULT_MAX_VERTICES = 100_000


class GraphError(ValueError):
    """Raised for graphs that violate the simple-graph preconditions."""


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class Graph:
    """Undirected simple graph, immutable after construction.

    Use :func:`build_graph` rather than calling the constructor directly.
    """

    __slots__ = ("n", "m", "indptr", "indices", "bits", "names")

    def __init__(self, n, indptr, indices, bits, names):
        self.n = int(n)
        self.indptr = _readonly(indptr)
        self.indices = _readonly(indices)
        self.bits = _readonly(bits)
        self.m = int(indices.shape[0] // 2)
        self.names = tuple(names)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.names == other.names
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    __hash__ = None

    def _check(self, v):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph with {self.n} vertices")

    def adjacent(self, u: int, v: int) -> bool:
        """Return True iff ``(u, v)`` is an edge. Constant time."""
        self._check(u)
        self._check(v)
        return bool((self.bits[u, v >> 3] >> (v & 7)) & 1)

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` in ascending index order."""
        self._check(v)
        return self.indices[self.indptr[v] : self.indptr[v + 1]].tolist()

    def degree(self, v: int) -> int:
        self._check(v)
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @property
    def adj_matrix(self) -> np.ndarray:
        """Dense boolean adjacency matrix (unpacked copy)."""
        return np.unpackbits(self.bits, axis=1, count=self.n, bitorder="little").astype(bool)

    @property
    def adj_lists(self) -> list[list[int]]:
        return [self.neighbors(v) for v in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        src = np.repeat(np.arange(self.n), self.degrees)
        keep = src < self.indices
        return list(zip(src[keep].tolist(), self.indices[keep].tolist()))

    def name_of(self, v: int) -> str:
        return self.names[v]


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]] | np.ndarray,
    names: Sequence[str] | None = None,
    *,
    max_vertices: int | None = DEFAULT_MAX_VERTICES,
) -> Graph:
    """Build a :class:`Graph` on vertices ``0 .. n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (u, v)
        Undirected edges. Duplicates (in either orientation) are collapsed.
    names : sequence of str, optional
        External vertex labels; defaults to ``str(i)``.
    max_vertices : int or None
        Refuse graphs larger than this, since the packed adjacency matrix
        needs ``n**2 / 8`` bytes. Pass ``None`` to lift the cap.

    Raises
    ------
    GraphError
        On a self-loop, an out-of-range endpoint, a bad ``names`` length,
        or ``n`` above ``max_vertices``.
    """
    n = int(n)
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if max_vertices is not None and n > max_vertices:
        raise GraphError(
            f"{n} vertices exceeds max_vertices={max_vertices} "
            f"(adjacency matrix would need {n * ((n + 7) // 8)} bytes); "
            "pass max_vertices=None to override"
        )
    if names is None:
        names = [str(i) for i in range(n)]
    elif len(names) != n:
        raise GraphError(f"expected {n} names, got {len(names)}")

    e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    if e.size == 0:
        e = e.reshape(0, 2)
    if e.ndim != 2 or e.shape[1] != 2:
        raise GraphError("edges must be a sequence of (u, v) pairs")

    bad = (e < 0) | (e >= n)
    if bad.any():
        i = int(np.argmax(bad.any(axis=1)))
        raise GraphError(f"edge {tuple(e[i].tolist())} has an endpoint outside [0, {n})")
    loops = e[:, 0] == e[:, 1]
    if loops.any():
        v = int(e[np.argmax(loops), 0])
        raise GraphError(f"self-loop at vertex {v} ({names[v]!r}); graphs must be simple")

    e = np.unique(np.sort(e, axis=1), axis=0)
    src = np.concatenate([e[:, 0], e[:, 1]])
    dst = np.concatenate([e[:, 1], e[:, 0]])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]

    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    bits = np.zeros((n, (n + 7) // 8), dtype=np.uint8)
    np.bitwise_or.at(bits, (src, dst >> 3), (1 << (dst & 7)).astype(np.uint8))
    return Graph(n, indptr, dst.astype(np.int64), bits, names)


def drop_isolated(g: Graph) -> Graph:
    """Remove degree-0 vertices, reindexing densely and keeping names."""
    keep = np.flatnonzero(g.degrees > 0)
    if keep.size == g.n:
        return g
    new_id = np.full(g.n, -1, dtype=np.int64)
    new_id[keep] = np.arange(keep.size)
    e = np.asarray(g.edges(), dtype=np.int64).reshape(-1, 2)
    return build_graph(
        keep.size, new_id[e], [g.names[v] for v in keep.tolist()], max_vertices=None
    )
