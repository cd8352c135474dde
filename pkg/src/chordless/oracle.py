"""Brute-force reference enumeration for small graphs.

A vertex set ``S`` (``|S| >= 3``) induces a chordless cycle iff the induced
subgraph is connected and every vertex in it has induced degree exactly 2.
The oracle tests every subset, so it is only usable up to ~24 vertices.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .graph import Graph
from .labeling import Labeling, degree_labeling
from .seeding import Cycle, canonicalize_cycle

__all__ = ["ORACLE_MAX_VERTICES", "oracle_enumerate", "induces_cycle", "is_chordless_cycle"]

ORACLE_MAX_VERTICES = 24

_CHUNK = 1 << 18


def _neighbor_masks(g: Graph) -> list[int]:
    adj = g.adj_matrix
    return [sum(1 << j for j in np.flatnonzero(adj[i]).tolist()) for i in range(g.n)]


def induces_cycle(g: Graph, vertices: Sequence[int]) -> bool:
    """True iff ``vertices`` induces a connected 2-regular subgraph of ``g``."""
    s = sorted(set(int(v) for v in vertices))
    if len(s) < 3:
        return False
    adj = g.adj_matrix[np.ix_(s, s)]
    if not (adj.sum(axis=1) == 2).all():
        return False
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in np.flatnonzero(adj[a]).tolist():
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen) == len(s)


def is_chordless_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """Check a vertex sequence against the adjacency matrix directly."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    adj = g.adj_matrix
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if adj[cycle[i], cycle[j]] != consecutive:
                return False
    return True


def _cyclic_order(members: list[int], nbr: list[int], smask: int) -> list[int]:
    start = members[0]
    order = [start]
    prev, cur = -1, start
    while True:
        m = nbr[cur] & smask
        nxt = -1
        while m:
            b = m & -m
            w = b.bit_length() - 1
            if w != prev:
                nxt = w
                break
            m ^= b
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def oracle_enumerate(g: Graph, ell: Labeling | None = None) -> set[Cycle]:
    """All chordless cycles of ``g`` in canonical form, by subset enumeration.

    Raises
    ------
    ValueError
        If ``g`` has more than :data:`ORACLE_MAX_VERTICES` vertices.
    """
    n = g.n
    if n > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle is limited to {ORACLE_MAX_VERTICES} vertices, graph has {n}")
    if ell is None:
        ell = degree_labeling(g)
    nbr = _neighbor_masks(g)
    nbr_arr = np.asarray(nbr, dtype=np.int64)
    found: set[Cycle] = set()

    total = 1 << n
    for lo in range(0, total, _CHUNK):
        s = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        ok = np.bitwise_count(s) >= 3
        for v in range(n):
            inside = ((s >> v) & 1).astype(bool)
            deg = np.bitwise_count(s & nbr_arr[v])
            ok &= ~inside | (deg == 2)
        for smask in s[ok].tolist():
            members = [v for v in range(n) if smask >> v & 1]
            order = _cyclic_order(members, nbr, smask)
            # 2-regular but disconnected sets give a walk shorter than |S|
            if len(order) == len(members):
                found.add(canonicalize_cycle(order, ell))
    return found
