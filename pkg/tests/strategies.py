from itertools import combinations

import numpy as np
from hypothesis import strategies as st

from chordless import Labeling, build_graph


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@st.composite
def labelings(draw, n):
    return Labeling.from_order(draw(st.permutations(range(n))))


@st.composite
def unicyclic_graphs(draw, min_cycle=4, max_cycle=9, max_extra=8):
    """A cycle with random trees hung off it, under a random vertex numbering."""
    k = draw(st.integers(min_cycle, max_cycle))
    extra = draw(st.integers(0, max_extra))
    edges = [(i, (i + 1) % k) for i in range(k)]
    for v in range(k, k + extra):
        edges.append((v, draw(st.integers(0, v - 1))))
    n = k + extra
    perm = draw(st.permutations(range(n)))
    return build_graph(n, [(perm[a], perm[b]) for a, b in edges]), k


def random_graph(n, p, seed):
    rng = np.random.default_rng(seed)
    return build_graph(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])
