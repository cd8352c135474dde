from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordless import (
    Labeling,
    build_graph,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    is_chordless_cycle,
    oracle_enumerate,
)
from chordless.oracle import induces_cycle

from .strategies import graphs


def test_c4():
    assert oracle_enumerate(gen_cycle(4), Labeling.identity(4)) == {(1, 0, 3, 2)}


def test_k4():
    found = oracle_enumerate(gen_complete(4))
    assert len(found) == 4
    assert all(len(c) == 3 for c in found)


def test_k23():
    found = oracle_enumerate(gen_complete_bipartite(2, 3))
    assert len(found) == 3
    assert all(len(c) == 4 and {0, 1} <= set(c) for c in found)


def test_size_cap():
    with pytest.raises(ValueError, match="limited to 24"):
        oracle_enumerate(build_graph(25, []))


def test_two_disjoint_triangles_are_not_one_cycle():
    g = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    found = oracle_enumerate(g)
    assert len(found) == 2
    assert not induces_cycle(g, range(6))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=3, max_n=7), st.data())
def test_subset_characterization(g, data):
    s = data.draw(st.lists(st.integers(0, g.n - 1), min_size=3, max_size=g.n, unique=True))
    by_order = any(is_chordless_cycle(g, (s[0],) + p) for p in permutations(s[1:]))
    assert induces_cycle(g, s) == by_order


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_against_permutation_search(g):
    # every chordless cycle, found by trying every vertex sequence
    expected = set()
    for k in range(3, g.n + 1):
        for s in combinations(range(g.n), k):
            if any(is_chordless_cycle(g, (s[0],) + p) for p in permutations(s[1:])):
                expected.add(frozenset(s))
    assert {frozenset(c) for c in oracle_enumerate(g)} == expected
