from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chordless import (
    Labeling,
    Triplet,
    build_graph,
    canonicalize_cycle,
    degree_labeling,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_path,
    triplets,
)
from chordless.seeding import is_canonical

from .strategies import graphs, labelings, unicyclic_graphs


def test_c4_single_triplet():
    seeds, tris = triplets(gen_cycle(4), Labeling.identity(4))
    assert seeds == [Triplet(1, 0, 3)]
    assert tris == []


def test_tree_has_no_seeds():
    g = gen_path(4)
    assert triplets(g, degree_labeling(g)) == ([], [])


def test_k3():
    g = gen_complete(3)
    ell = degree_labeling(g)
    seeds, tris = triplets(g, ell)
    assert seeds == []
    assert len(tris) == 1
    assert tris[0][1] == ell.inverse[0]


def test_k88_triplet_count():
    g = gen_complete_bipartite(8, 8)
    assert len(triplets(g, degree_labeling(g))[0]) == 140


def test_labeling_size_mismatch():
    with pytest.raises(ValueError):
        triplets(gen_cycle(4), Labeling.identity(3))


@given(unicyclic_graphs())
def test_unique_cycle_gives_one_triplet(case):
    g, _ = case
    assert len(triplets(g, degree_labeling(g))[0]) == 1


@given(graphs(max_n=9), st.data())
def test_triplet_soundness(g, data):
    ell = data.draw(labelings(g.n))
    seeds, tris = triplets(g, ell)
    for x, u, y in seeds:
        assert g.adjacent(x, u) and g.adjacent(u, y) and not g.adjacent(x, y)
        assert ell[u] < ell[x] < ell[y]
    for x, u, y in tris:
        assert g.adjacent(x, u) and g.adjacent(u, y) and g.adjacent(x, y)
        assert ell[u] < ell[x] < ell[y]
    brute = sum(
        1 for a, b, c in combinations(range(g.n), 3)
        if g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c)
    )
    assert len(tris) == len(set(tris)) == brute
    assert len(seeds) == len(set(seeds))


def test_canonicalize_examples():
    ell = Labeling.identity(4)
    g = gen_cycle(4)
    assert canonicalize_cycle([2, 3, 0, 1], ell, g) == (1, 0, 3, 2)
    assert canonicalize_cycle([1, 0, 3, 2], ell) == (1, 0, 3, 2)
    assert canonicalize_cycle([2, 3, 0, 1][::-1], ell) == (1, 0, 3, 2)


@pytest.mark.parametrize("bad", [[0, 1], [0, 1, 0], [0, 2, 1, 3]])
def test_canonicalize_rejects(bad):
    with pytest.raises(ValueError):
        canonicalize_cycle(bad, Labeling.identity(4), gen_cycle(4))


@given(st.integers(3, 12).flatmap(lambda k: st.tuples(st.permutations(range(k)), labelings(k))))
def test_all_rotations_and_reflections_agree(case):
    cyc, ell = case
    k = len(cyc)
    forms = {canonicalize_cycle(cyc[i:] + cyc[:i], ell) for i in range(k)}
    rev = cyc[::-1]
    forms |= {canonicalize_cycle(rev[i:] + rev[:i], ell) for i in range(k)}
    assert len(forms) == 1
    (canon,) = forms
    assert is_canonical(canon, ell)
    assert sorted(canon) == sorted(cyc)
