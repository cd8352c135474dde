import numpy as np
import pytest
from hypothesis import given, settings

from chordless import (
    Enumeration,
    Labeling,
    block_neighbors,
    build_graph,
    cc_visit,
    chordless_cycles,
    degree_labeling,
    enumerate_bfs,
    enumerate_dfs,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_grid,
    gen_wheel,
    is_chordless_cycle,
    oracle_enumerate,
    unblock_neighbors,
)
from chordless.seeding import is_canonical

from .strategies import graphs, random_graph

ENGINES = [enumerate_dfs, enumerate_bfs]


def collect(engine, g, ell=None, **kw):
    out = []
    stats = engine(g, ell, out.append, **kw)
    return out, stats


@pytest.mark.parametrize("engine", ENGINES)
@pytest.mark.parametrize(
    "g, holes, triangles",
    [
        (gen_cycle(100), 1, 0),
        (gen_wheel(100), 1, 100),
        (gen_complete_bipartite(8, 8), 784, 0),
        (gen_complete(4), 0, 4),
        (gen_grid(5, 6), 749, 0),
    ],
    ids=["C100", "wheel100", "K8,8", "K4", "grid5x6"],
)
def test_counts(engine, g, holes, triangles):
    stats = engine(g, check=1)
    assert (stats.cycles_ge4, stats.triangles) == (holes, triangles)
    assert stats.counter_violations == 0


def test_k4_matches_brute_force():
    g = gen_complete(4)
    assert {len(c) for c in oracle_enumerate(g)} == {3}
    assert len(oracle_enumerate(g)) == 4


def test_c100_emits_the_ring():
    (cyc,), _ = collect(enumerate_dfs, gen_cycle(100))
    assert sorted(cyc) == list(range(100))


def test_triangles_come_first():
    out, stats = collect(enumerate_dfs, gen_wheel(6))
    assert [len(c) for c in out] == [3] * 6 + [6]
    assert stats.total == len(out) == 7


@pytest.mark.parametrize("engine", ENGINES)
def test_long_paths_do_not_recurse(engine):
    stats = engine(gen_cycle(5000))
    assert stats.cycles_ge4 == 1
    assert stats.longest_path == 5000


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_engines_match_oracle(g):
    ell = degree_labeling(g)
    expected = oracle_enumerate(g, ell)
    for engine in ENGINES:
        out, stats = collect(engine, g, ell, check=2)
        assert len(out) == len(set(out))
        assert set(out) == expected
        assert stats.counter_violations == stats.revisit_violations == 0
        for c in out:
            assert is_canonical(c, ell)
            assert is_chordless_cycle(g, c)


def test_arbitrary_labeling_still_complete():
    g = random_graph(10, 0.4, seed=3)
    rng = np.random.default_rng(0)
    ell = Labeling.from_order(rng.permutation(10))
    out, _ = collect(enumerate_dfs, g, ell, check=2)
    assert set(out) == oracle_enumerate(g, ell)


def test_deterministic_order():
    g = random_graph(12, 0.4, seed=11)
    assert collect(enumerate_dfs, g)[0] == collect(enumerate_dfs, g)[0]


def test_count_only_agrees_with_listing():
    g = gen_grid(4, 6)
    out, listed = collect(enumerate_dfs, g)
    counted = enumerate_dfs(g)
    assert counted.total == listed.total == len(out)
    assert counted.visits == listed.visits


@pytest.mark.parametrize("limit", [0, 2, 3, 10])
def test_limit(limit):
    g = gen_wheel(6)
    out, _ = collect(enumerate_dfs, g, limit=limit)
    assert len(out) == min(limit, 7)
    assert enumerate_dfs(g, limit=limit).total >= min(limit, 7)


def test_chunks_match_cycles():
    g = gen_grid(4, 5)
    run = Enumeration(g, chunk=7)
    flat = []
    lengths = []
    for f, ln in run.chunks():
        flat.extend(f.tolist())
        lengths.extend(ln.tolist())
    assert sum(lengths) == len(flat)
    assert len(lengths) == run.stats.cycles_ge4
    holes = list(chordless_cycles(g, min_length=4))
    assert [len(c) for c in holes] == lengths


def test_single_use():
    run = Enumeration(gen_cycle(4))
    run.count()
    with pytest.raises(RuntimeError):
        run.count()


def test_rejects_unknown_algorithm():
    with pytest.raises(ValueError):
        Enumeration(gen_cycle(4), algorithm="johnson")


# -- blocking counters ---------------------------------------------------------

def test_block_unblock():
    star = build_graph(4, [(3, 0), (3, 1), (3, 2)])
    blocked = np.zeros(4, dtype=np.int64)
    block_neighbors(star, 3, blocked)
    assert blocked.tolist() == [1, 1, 1, 0]
    block_neighbors(star, 3, blocked)
    assert blocked.tolist() == [2, 2, 2, 0]
    unblock_neighbors(star, 3, blocked)
    unblock_neighbors(star, 3, blocked)
    assert blocked.tolist() == [0, 0, 0, 0]
    unblock_neighbors(star, 3, blocked)
    assert blocked.tolist() == [0, 0, 0, 0]


def test_block_isolated_vertex():
    g = build_graph(2, [])
    blocked = np.zeros(2, dtype=np.int64)
    block_neighbors(g, 0, blocked)
    assert blocked.tolist() == [0, 0]


def test_unblock_partial():
    g = build_graph(2, [(0, 1)])
    blocked = np.array([2, 0], dtype=np.int64)
    unblock_neighbors(g, 1, blocked)
    assert blocked.tolist() == [1, 0]


# -- cc_visit ------------------------------------------------------------------

def _counters_for(g, path):
    blocked = np.zeros(g.n, dtype=np.int64)
    for v in path[1:-1]:
        block_neighbors(g, v, blocked)
    return blocked


def test_cc_visit_closes_c4():
    g = gen_cycle(4)
    ell = Labeling.identity(4)
    blocked = _counters_for(g, [1, 0, 3])
    before = blocked.copy()
    out = []
    stats = cc_visit(g, ell, [1, 0, 3], blocked, out.append)
    assert out == [(1, 0, 3, 2)]
    assert stats.recursions == 1 and stats.visits == 2
    assert (blocked == before).all()


def test_cc_visit_candidate_blocked_twice():
    # 0 is adjacent to 1, 2, 3 and 2-3 is an edge: extending <1, 0, 2> by 3
    # would leave the chord 0-3, and 3 is blocked by both 0 and 2.
    g = build_graph(4, [(0, 1), (0, 2), (0, 3), (2, 3)])
    ell = Labeling.identity(4)
    blocked = _counters_for(g, [1, 0, 2])
    out = []
    stats = cc_visit(g, ell, [1, 0, 2], blocked, out.append)
    assert out == []
    assert stats.visits == 2 and stats.recursions == 1
    assert not any(c[:3] == (1, 0, 2) for c in oracle_enumerate(g, ell))


def test_cc_visit_all_labels_below_key():
    # P4 0-1-2-3; key is l(1) = 2 and the tip's only other neighbor has label 1
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    ell = Labeling.from_labels([3, 2, 4, 1])
    path = [0, 1, 2]
    blocked = _counters_for(g, path)
    before = blocked.copy()
    stats = cc_visit(g, ell, path, blocked)
    assert stats.cycles_ge4 == 0 and stats.recursions == 1
    assert (blocked == before).all()


def test_cc_visit_accumulates_stats():
    g = gen_cycle(4)
    ell = Labeling.identity(4)
    total = enumerate_dfs(g, ell)
    cc_visit(g, ell, [1, 0, 3], _counters_for(g, [1, 0, 3]), stats=total)
    assert total.cycles_ge4 == 2


def test_cc_visit_validates():
    g = gen_cycle(4)
    with pytest.raises(ValueError):
        cc_visit(g, Labeling.identity(4), [0, 1], np.zeros(4, dtype=np.int64))
    with pytest.raises(ValueError):
        cc_visit(g, Labeling.identity(4), [1, 0, 3], np.zeros(4, dtype=np.int32))
