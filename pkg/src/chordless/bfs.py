"""Reachability test used to prune chordless-path expansions.

A chordless path ``<u_1, ..., u_t>`` can be completed into a chordless cycle
(whose smallest label is ``l(u_2)``) exactly when ``u_1`` and ``u_t`` are
connected once we delete the closed neighborhoods of ``u_2 .. u_{t-1}``
(keeping ``u_1`` and ``u_t``) and every vertex labeled below ``l(u_2)``. Any
shortest ``u_t``-``u_1`` path in what remains closes the cycle without a chord.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .graph import Graph
from .labeling import Labeling

__all__ = ["PredecessorMap", "pruned_bfs", "surviving_vertices"]


@dataclass(frozen=True, eq=False)
class PredecessorMap:
    """BFS tree as a predecessor array; ``pi[v] == -1`` where undefined.

    The root is its own predecessor.
    """

    root: int
    pi: np.ndarray

    def defined(self, v: int) -> bool:
        return bool(self.pi[v] >= 0)

    __contains__ = defined

    def __getitem__(self, v: int) -> int | None:
        p = int(self.pi[v])
        return None if p < 0 else p

    def path_to_root(self, v: int) -> list[int]:
        if not self.defined(v):
            raise KeyError(f"vertex {v} was not reached")
        out = [v]
        while out[-1] != self.root:
            out.append(int(self.pi[out[-1]]))
        return out


def _interior_counters(g: Graph, path: Sequence[int]) -> np.ndarray:
    blocked = np.zeros(g.n, dtype=np.int64)
    for v in path[1:-1]:
        K.block_neighbors(g.indptr, g.indices, blocked, v)
    return blocked


def _check_path(g: Graph, path: Sequence[int]) -> list[int]:
    p = [int(v) for v in path]
    if len(p) < 3:
        raise ValueError("path must have at least 3 vertices")
    if len(set(p)) != len(p):
        raise ValueError(f"path {p} repeats a vertex")
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if g.adjacent(p[i], p[j]) != (j == i + 1):
                raise ValueError(f"{p} is not a chordless path")
    return p


def surviving_vertices(g: Graph, ell: Labeling, path: Sequence[int]) -> np.ndarray:
    """Boolean mask of the vertices kept by the pruning rule for ``path``."""
    p = _check_path(g, path)
    blocked = _interior_counters(g, p)
    keep = (ell.label > ell[p[1]]) & (blocked == 0)
    keep[p[0]] = keep[p[-1]] = True
    return keep


def pruned_bfs(g: Graph, ell: Labeling, path: Sequence[int]) -> PredecessorMap:
    """Breadth-first search from ``path[0]`` in the pruned graph of ``path``.

    Raises ValueError unless ``path`` is a chordless path of 3+ vertices.
    """
    p = _check_path(g, path)
    blocked = _interior_counters(g, p)
    pi = np.full(g.n, -1, dtype=np.int64)
    seen = np.zeros(g.n, dtype=np.int64)
    queue = np.zeros(g.n, dtype=np.int64)
    label = np.ascontiguousarray(ell.label, dtype=np.int64)
    K.pruned_bfs(g.indptr, g.indices, label, blocked, ell[p[1]], p[0], p[-1], pi, seen, 1, queue)
    pi[seen != 1] = -1
    return PredecessorMap(p[0], pi)
