"""Initial triplets, triangles, and the canonical form of a cycle.

Under a labeling ``l``, a cycle ``<v1, ..., vk>`` is written canonically when
``v2`` carries the smallest label and ``l(v1) < l(v3)``; exactly one of the
``2k`` rotations/reflections satisfies this. Every chordless cycle of length
four or more therefore starts with a unique *triplet* ``<x, u, y>``: a path
with ``l(u) < l(x) < l(y)`` and no edge ``x-y``. The same pattern with the
edge ``x-y`` present is a triangle, already in canonical form.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .graph import Graph
from .labeling import Labeling

__all__ = ["Triplet", "triplets", "triplet_array", "canonicalize_cycle", "is_canonical"]

Cycle = tuple[int, ...]


class Triplet(NamedTuple):
    x: int
    u: int
    y: int


def triplets(g: Graph, ell: Labeling) -> tuple[list[Triplet], list[Cycle]]:
    """Return ``(T, triangles)`` for graph ``g`` under labeling ``ell``.

    ``T`` holds every ``<x, u, y>`` with ``x, y`` neighbors of ``u``,
    ``l(u) < l(x) < l(y)`` and ``x``, ``y`` non-adjacent. ``triangles`` holds
    the same pattern where ``x`` and ``y`` are adjacent, so each triangle of
    ``g`` appears once. Both lists are ordered by ``u``, then by ``(x, y)``.
    """
    if len(ell) != g.n:
        raise ValueError(f"labeling has {len(ell)} entries, graph has {g.n} vertices")
    label = ell.label
    seeds: list[Triplet] = []
    tris: list[Cycle] = []
    for u in range(g.n):
        lu = label[u]
        higher = [w for w in g.neighbors(u) if label[w] > lu]
        found_t, found_c = [], []
        for a, b in combinations(higher, 2):
            x, y = (a, b) if label[a] < label[b] else (b, a)
            if g.adjacent(x, y):
                found_c.append((x, u, y))
            else:
                found_t.append(Triplet(x, u, y))
        found_t.sort()
        found_c.sort()
        seeds.extend(found_t)
        tris.extend(found_c)
    return seeds, tris


def triplet_array(seeds: Sequence[Triplet]) -> np.ndarray:
    """Pack triplets into a ``(len(seeds), 3)`` int64 array."""
    return np.asarray(seeds, dtype=np.int64).reshape(-1, 3)


def is_canonical(cycle: Sequence[int], ell: Labeling) -> bool:
    labels = [ell[v] for v in cycle]
    return len(cycle) >= 3 and labels[1] == min(labels) and labels[0] < labels[2]


def canonicalize_cycle(cycle: Sequence[int], ell: Labeling, g: Graph | None = None) -> Cycle:
    """Rotate/reflect ``cycle`` into its canonical form under ``ell``.

    If ``g`` is given, the input is also checked to be a cycle of ``g``
    (consecutive vertices adjacent, including last-to-first).

    Raises
    ------
    ValueError
        If the input has fewer than three vertices, repeats a vertex, or
        (with ``g``) misses an edge.
    """
    cyc = [int(v) for v in cycle]
    k = len(cyc)
    if k < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {k}")
    if len(set(cyc)) != k:
        raise ValueError(f"cycle {cyc} repeats a vertex")
    if g is not None:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not g.adjacent(a, b):
                raise ValueError(f"cycle {cyc} is missing edge ({a}, {b})")

    i = min(range(k), key=lambda j: ell[cyc[j]])
    before, after = cyc[i - 1], cyc[(i + 1) % k]
    if ell[before] < ell[after]:
        # forward: <v_{i-1}, v_i, v_{i+1}, ...>
        start = (i - 1) % k
        return tuple(cyc[(start + j) % k] for j in range(k))
    start = (i + 1) % k
    return tuple(cyc[(start - j) % k] for j in range(k))
