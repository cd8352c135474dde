"""Vertex labelings and the minimum-degree peeling order."""

from __future__ import annotations

import heapq
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .graph import Graph

__all__ = ["Labeling", "degree_labeling"]


@dataclass(frozen=True, eq=False)
class Labeling:
    """A bijection from vertices ``0 .. n-1`` onto labels ``1 .. n``.

    ``label[v]`` is the label of vertex ``v``; ``inverse[i - 1]`` is the vertex
    carrying label ``i``.
    """

    label: np.ndarray
    inverse: np.ndarray

    def __post_init__(self):
        n = self.label.shape[0]
        if self.inverse.shape != (n,):
            raise ValueError("label and inverse lengths differ")
        if n and not (
            np.array_equal(np.sort(self.label), np.arange(1, n + 1))
            and np.array_equal(self.label[self.inverse], np.arange(1, n + 1))
        ):
            raise ValueError("not a bijection onto 1..n")
        self.label.flags.writeable = False
        self.inverse.flags.writeable = False

    @classmethod
    def from_order(cls, order: Sequence[int]) -> Labeling:
        """Label ``order[i]`` with ``i + 1``."""
        inverse = np.asarray(order, dtype=np.int64)
        label = np.empty_like(inverse)
        label[inverse] = np.arange(1, inverse.size + 1)
        return cls(label, inverse)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Labeling:
        label = np.asarray(labels, dtype=np.int64)
        if label.size and not np.array_equal(np.sort(label), np.arange(1, label.size + 1)):
            raise ValueError("labels must be a permutation of 1..n")
        inverse = np.argsort(label).astype(np.int64)
        return cls(label, inverse)

    @classmethod
    def identity(cls, n: int) -> Labeling:
        return cls.from_order(range(n))

    def __len__(self):
        return self.label.shape[0]

    def __getitem__(self, v: int) -> int:
        return int(self.label[v])

    def __eq__(self, other):
        if not isinstance(other, Labeling):
            return NotImplemented
        return np.array_equal(self.label, other.label)

    __hash__ = None


def degree_labeling(g: Graph) -> Labeling:
    """Label vertices in the order they are peeled off by minimum degree.

    Repeatedly removes a vertex of minimum degree in the remaining graph and
    gives it the next label. Ties go to the smallest vertex index, which is the
    vertex a left-to-right scan with a strict ``<`` comparison would pick.

    A heap with lazy deletion replaces the quadratic scan; entries are
    ``(degree, index)`` so the heap order is exactly that tie-break.
    """
    deg = g.degrees.tolist()
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order = []
    indptr, indices = g.indptr, g.indices
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        for w in indices[indptr[v] : indptr[v + 1]].tolist():
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return Labeling.from_order(order)
