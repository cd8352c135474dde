"""Enumerate every chordless cycle of a graph exactly once.

Two engines share one search loop:

``dfs``
    Each triplet ``<x, u, y>`` is extended from ``y`` by neighbors whose label
    exceeds ``l(u)`` and whose blocking counter is exactly 1 once the path's
    tip has blocked its own neighbors. A candidate adjacent to ``x`` closes a
    cycle; any other candidate extends the path.
``bfs``
    Before a path ``<u_1, ..., u_t>`` is expanded, a breadth-first search from
    ``u_1`` runs over the graph with the closed neighborhoods of
    ``u_2 .. u_{t-1}`` and every label ``<= l(u_2)`` removed (``u_1`` and
    ``u_t`` kept). The path is expanded only if ``u_t`` is reached, and only
    through reached neighbors. Every expanded path then leads to at least one
    cycle.

Cycles are emitted in canonical form (smallest label second, ``l(v1) < l(v3)``),
triangles first, then the longer cycles in triplet order.

Examples
--------
>>> from chordless.generators import gen_complete_bipartite
>>> g = gen_complete_bipartite(2, 3)
>>> cycles = []
>>> stats = enumerate_dfs(g, sink=cycles.append)
>>> stats.cycles_ge4, stats.triangles
(3, 0)
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterator, Sequence
from dataclasses import asdict, dataclass

import numpy as np

from . import _kernels as K
from .graph import Graph
from .labeling import Labeling, degree_labeling
from .seeding import Cycle, triplet_array, triplets

__all__ = [
    "EnumStats",
    "Enumeration",
    "enumerate_dfs",
    "enumerate_bfs",
    "chordless_cycles",
    "cc_visit",
    "block_neighbors",
    "unblock_neighbors",
    "ALGORITHMS",
]

ALGORITHMS = ("dfs", "bfs")

Sink = Callable[[Cycle], object]


@dataclass
class EnumStats:
    """Counters collected during one enumeration run.

    ``visits`` counts neighbor examinations in the candidate loop and
    ``recursions`` counts path expansions (one per visited path, including
    the triplets themselves). ``pruned`` counts paths the BFS gate refused and
    ``dead_ends`` expanded paths that produced no cycle; the latter is zero
    for the ``bfs`` engine.
    """

    num_triplets: int = 0
    visits: int = 0
    recursions: int = 0
    longest_path: int = 0
    cycles_ge4: int = 0
    triangles: int = 0
    runtime_ms: float = 0.0
    pruned: int = 0
    dead_ends: int = 0
    counter_violations: int = 0
    revisit_violations: int = 0

    @property
    def total(self) -> int:
        return self.cycles_ge4 + self.triangles

    def as_dict(self) -> dict:
        return asdict(self)


class Enumeration:
    """One enumeration run over ``g``.

    Parameters
    ----------
    g : Graph
    ell : Labeling, optional
        Defaults to :func:`~chordless.labeling.degree_labeling`.
    algorithm : {"dfs", "bfs"}
    check : int
        0 disables runtime invariant checks. 1 verifies that every blocking
        counter is back to zero after each triplet and that ``u_1`` is never
        offered as an extension. 2 additionally recomputes every counter at
        each expansion (``O(n t)`` per path; small graphs only).
    chunk : int
        Number of cycles buffered per round trip into the compiled loop.

    A run is single use: call exactly one of :meth:`run`, :meth:`cycles`,
    :meth:`chunks` or :meth:`count`.
    """

    def __init__(self, g: Graph, ell: Labeling | None = None, *, algorithm: str = "dfs",
                 check: int = 0, chunk: int = 4096, _seed: bool = True):
        if algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {algorithm!r}")
        self.graph = g
        self.ell = degree_labeling(g) if ell is None else ell
        if len(self.ell) != g.n:
            raise ValueError(f"labeling has {len(self.ell)} entries, graph has {g.n} vertices")
        self.algorithm = algorithm
        self.check = int(check)
        self.stats = EnumStats()
        self._started = False

        t0 = time.perf_counter()
        seeds, self.triangles = triplets(g, self.ell) if _seed else ([], [])
        self._trip = triplet_array(seeds)
        self.stats.num_triplets = len(seeds)
        self.stats.triangles = len(self.triangles)
        if self.triangles:
            self.stats.longest_path = 3
        self._setup_ms = (time.perf_counter() - t0) * 1e3

        n = g.n
        self._label = np.ascontiguousarray(self.ell.label, dtype=np.int64)
        self._path = np.zeros(n + 1, dtype=np.int64)
        self._cursor = np.zeros(n + 1, dtype=np.int64)
        self._entry = np.zeros(n + 1, dtype=np.int64)
        self._expanded = np.zeros(n + 1, dtype=np.int8)
        self.blocked = np.zeros(n, dtype=np.int64)
        self._pi_ok = np.zeros(max(1, g.indices.shape[0]), dtype=np.int8)
        self._pi = np.full(n, -1, dtype=np.int64)
        self._seen = np.zeros(n, dtype=np.int64)
        self._queue = np.zeros(max(1, n), dtype=np.int64)
        self._st = K.new_state()
        self._k = K.new_stats()
        self._out = np.zeros(max(16 * (n + 1), 1 << 16), dtype=np.int64)
        self._out_len = np.zeros(max(1, chunk), dtype=np.int64)

    def _start(self):
        if self._started:
            raise RuntimeError("an Enumeration can only be consumed once")
        self._started = True

    def _step(self, emit: bool, hole_limit: int) -> int:
        g = self.graph
        return K.search(
            g.indptr, g.indices, g.bits, self._label, self._trip, self._path, self._cursor,
            self._entry, self._expanded, self.blocked, self._pi_ok, self._pi, self._seen,
            self._queue, self._st, self._k, self._out, self._out_len,
            self.algorithm == "bfs", self.check, emit, hole_limit,
        )

    def _sync(self, elapsed_ms: float):
        k, s = self._k, self.stats
        s.visits = int(k[K.VISITS])
        s.recursions = int(k[K.RECURSIONS])
        s.longest_path = max(s.longest_path, int(k[K.LONGEST]))
        s.cycles_ge4 = int(k[K.HOLES])
        s.pruned = int(k[K.PRUNED])
        s.dead_ends = int(k[K.DEAD_ENDS])
        s.counter_violations = int(k[K.COUNTERS])
        s.revisit_violations = int(k[K.REVISITS])
        s.runtime_ms = self._setup_ms + elapsed_ms

    def chunks(self, hole_limit: int | None = None) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        """Yield cycles of length >= 4 in bulk as ``(flat, lengths)`` arrays.

        ``flat`` concatenates the vertex sequences; ``lengths`` gives each
        cycle's length. The arrays are fresh copies. Triangles are not
        included; they are available as :attr:`triangles`.
        """
        self._start()
        limit = -1 if hole_limit is None else int(hole_limit)
        t0 = time.perf_counter()
        elapsed = 0.0
        try:
            while True:
                status = self._step(True, limit)
                pos, cnt = int(self._st[K.OUT_POS]), int(self._st[K.OUT_CNT])
                self._st[K.OUT_POS] = 0
                self._st[K.OUT_CNT] = 0
                elapsed += time.perf_counter() - t0
                self._sync(elapsed * 1e3)
                if cnt:
                    yield self._out[:pos].copy(), self._out_len[:cnt].copy()
                t0 = time.perf_counter()
                if status != K.BUFFER_FULL:
                    return
        finally:
            self._sync(elapsed * 1e3)

    def _holes(self, hole_limit: int | None) -> Iterator[Cycle]:
        for flat, lengths in self.chunks(hole_limit):
            values = flat.tolist()
            pos = 0
            for k in lengths.tolist():
                yield tuple(values[pos : pos + k])
                pos += k

    def cycles(self, *, include_triangles: bool = True, limit: int | None = None) -> Iterator[Cycle]:
        """Yield canonical cycles one at a time, triangles first."""
        delivered = 0
        if include_triangles:
            for tri in self.triangles:
                if limit is not None and delivered >= limit:
                    self._start()
                    return
                delivered += 1
                yield tri
        hole_limit = None if limit is None else limit - delivered
        if hole_limit is not None and hole_limit <= 0:
            self._start()
            return
        yield from self._holes(hole_limit)

    def count(self, hole_limit: int | None = None) -> EnumStats:
        """Run to completion without materializing cycles."""
        self._start()
        t0 = time.perf_counter()
        self._step(False, -1 if hole_limit is None else int(hole_limit))
        self._sync((time.perf_counter() - t0) * 1e3)
        return self.stats

    def run(self, sink: Sink | None = None, *, include_triangles: bool = True,
            limit: int | None = None) -> EnumStats:
        """Feed every cycle to ``sink`` (or just count when ``sink`` is None)."""
        if sink is None:
            if limit is None:
                return self.count()
            budget = limit - (self.stats.triangles if include_triangles else 0)
            if budget <= 0:
                self._start()
                return self.stats
            return self.count(budget)
        for cyc in self.cycles(include_triangles=include_triangles, limit=limit):
            sink(cyc)
        return self.stats


def enumerate_dfs(g: Graph, ell: Labeling | None = None, sink: Sink | None = None, *,
                  check: int = 0, limit: int | None = None) -> EnumStats:
    """Enumerate all chordless cycles of ``g`` with the blocking-counter DFS.

    Each cycle is passed to ``sink`` once, as a canonical vertex tuple;
    triangles come first. With ``sink=None`` cycles are only counted.
    """
    return Enumeration(g, ell, algorithm="dfs", check=check).run(sink, limit=limit)


def enumerate_bfs(g: Graph, ell: Labeling | None = None, sink: Sink | None = None, *,
                  check: int = 0, limit: int | None = None) -> EnumStats:
    """Same contract as :func:`enumerate_dfs`, with BFS reachability gating."""
    return Enumeration(g, ell, algorithm="bfs", check=check).run(sink, limit=limit)


def chordless_cycles(g: Graph, ell: Labeling | None = None, *, algorithm: str = "dfs",
                     min_length: int = 3) -> Iterator[Cycle]:
    """Lazily yield the chordless cycles of ``g``."""
    run = Enumeration(g, ell, algorithm=algorithm)
    return run.cycles(include_triangles=min_length <= 3)


def block_neighbors(g: Graph, v: int, blocked: np.ndarray) -> None:
    """Increment ``blocked[u]`` for every neighbor ``u`` of ``v``."""
    K.block_neighbors(g.indptr, g.indices, blocked, v)


def unblock_neighbors(g: Graph, v: int, blocked: np.ndarray) -> None:
    """Decrement positive ``blocked[u]`` for every neighbor ``u`` of ``v``."""
    K.unblock_neighbors(g.indptr, g.indices, blocked, v)


def cc_visit(g: Graph, ell: Labeling, path: Sequence[int], blocked: np.ndarray,
             sink: Sink | None = None, stats: EnumStats | None = None, *,
             algorithm: str = "dfs", check: int = 0) -> EnumStats:
    """Expand one chordless path ``<u_1, ..., u_t>`` and emit the cycles it closes.

    ``blocked`` must hold, for every vertex, its number of neighbors among
    ``u_2 .. u_{t-1}``. It is updated in place during the search and is back
    in that state on return. Counters are added to ``stats`` if given.
    """
    path = [int(v) for v in path]
    t = len(path)
    if t < 3:
        raise ValueError("cc_visit needs a path of at least 3 vertices")
    if blocked.shape != (g.n,) or blocked.dtype != np.int64:
        raise ValueError("blocked must be an int64 array of length n")

    run = Enumeration(g, ell, algorithm=algorithm, check=check, _seed=False)
    run.blocked = blocked
    run._path[:t] = path
    run._st[K.PENDING] = t
    run._st[K.BASE] = t
    run._st[K.WRAP] = -1
    run._st[K.KEY] = ell[path[1]]

    for cyc in run._holes(None):
        if sink is not None:
            sink(cyc)
    if stats is None:
        return run.stats
    s = run.stats
    stats.visits += s.visits
    stats.recursions += s.recursions
    stats.longest_path = max(stats.longest_path, s.longest_path)
    stats.cycles_ge4 += s.cycles_ge4
    stats.pruned += s.pruned
    stats.dead_ends += s.dead_ends
    stats.counter_violations += s.counter_violations
    stats.revisit_violations += s.revisit_violations
    stats.runtime_ms += s.runtime_ms
    return stats
