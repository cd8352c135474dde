"""Standard graph families.

Vertex numbering is fixed so that labelings (and hence statistics) are
reproducible: wheels put the hub last, complete bipartite graphs put side A
first, grids are row-major.
"""

from __future__ import annotations

import re

import numpy as np

from .graph import Graph, GraphError, build_graph

__all__ = [
    "gen_cycle",
    "gen_path",
    "gen_wheel",
    "gen_complete",
    "gen_complete_bipartite",
    "gen_grid",
    "gen_gnp",
    "gen_random_tree",
    "from_spec",
]


def _need(cond, msg):
    if not cond:
        raise GraphError(msg)


def gen_cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_wheel(n: int) -> Graph:
    """Rim ``0 .. n-1`` plus hub ``n``: ``n + 1`` vertices, ``2n`` edges."""
    _need(n >= 3, f"wheel needs a rim of n >= 3, got {n}")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return build_graph(n + 1, rim + [(i, n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with side A on ``0 .. a-1`` and side B on ``a .. a+b-1``."""
    _need(a >= 1 and b >= 1, f"K_(a,b) needs a, b >= 1, got {a}, {b}")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gen_grid(rows: int, cols: int) -> Graph:
    """``rows x cols`` grid, vertex ``(i, j)`` at index ``i * cols + j``."""
    _need(rows >= 1 and cols >= 1, f"grid needs rows, cols >= 1, got {rows}, {cols}")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def gen_gnp(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdos-Renyi G(n, p)."""
    _need(n >= 0 and 0.0 <= p <= 1.0, f"G(n, p) needs n >= 0 and p in [0, 1], got {n}, {p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    return build_graph(n, np.stack([iu[keep], ju[keep]], axis=1))


def gen_random_tree(n: int, seed: int | None = None) -> Graph:
    """Random recursive tree: vertex ``i`` attaches to a uniform earlier vertex."""
    _need(n >= 1, f"tree needs n >= 1, got {n}")
    rng = np.random.default_rng(seed)
    return build_graph(n, [(i, int(rng.integers(i))) for i in range(1, n)])


_FAMILIES = {
    "cycle": (gen_cycle, (int,)),
    "path": (gen_path, (int,)),
    "wheel": (gen_wheel, (int,)),
    "complete": (gen_complete, (int,)),
    "kbip": (gen_complete_bipartite, (int, int)),
    "grid": (gen_grid, (int, int)),
    "gnp": (gen_gnp, (int, float, int)),
    "tree": (gen_random_tree, (int, int)),
}


def from_spec(spec: str) -> Graph:
    """Build a graph from ``family:arg,arg`` such as ``grid:5,6`` or ``gnp:10,0.3,7``.

    Families: cycle:n, path:n, wheel:n, complete:n, kbip:a,b, grid:r,c,
    gnp:n,p[,seed], tree:n[,seed].
    """
    m = re.fullmatch(r"\s*(\w+)\s*:\s*([^\s].*?)\s*", spec)
    if not m or m.group(1) not in _FAMILIES:
        raise ValueError(f"unknown generator {spec!r}; expected one of {sorted(_FAMILIES)}")
    fn, types = _FAMILIES[m.group(1)]
    raw = [a.strip() for a in m.group(2).split(",")]
    optional_seed = m.group(1) in ("gnp", "tree")
    if not (len(raw) == len(types) or (optional_seed and len(raw) == len(types) - 1)):
        raise ValueError(f"generator {m.group(1)!r} takes {len(types)} arguments, got {spec!r}")
    try:
        args = [t(a) for t, a in zip(types, raw)]
    except ValueError:
        raise ValueError(f"bad arguments in generator spec {spec!r}") from None
    return fn(*args)
