import pytest

from chordless import FoodWeb, drop_isolated, enumerate_dfs, niche_overlap


def test_shared_prey_links_predators():
    g = niche_overlap(FoodWeb.from_pairs([("p1", "w"), ("p2", "w")]))
    assert g.names == ("p1", "w", "p2")
    assert g.edges() == [(0, 2)]


def test_distinct_prey():
    g = niche_overlap(FoodWeb.from_pairs([("p1", "w1"), ("p2", "w2")]))
    assert g.m == 0


def test_chain_has_no_competition():
    g = niche_overlap(FoodWeb.from_pairs([("a", "b"), ("b", "c")]))
    assert g.m == 0


def test_direction_flag():
    fw = FoodWeb.from_pairs([("w", "p1"), ("w", "p2")])
    assert niche_overlap(fw, "prey-to-predator").m == 1
    assert niche_overlap(fw, "predator-to-prey").m == 0
    with pytest.raises(ValueError):
        niche_overlap(fw, "sideways")


def test_self_arc_rejected():
    with pytest.raises(ValueError, match="self-arc"):
        FoodWeb.from_pairs([("a", "a")])


def test_duplicate_arcs_removed():
    fw = FoodWeb.from_pairs([("a", "b"), ("a", "b")])
    assert fw.arcs == ((0, 1),)


def test_competition_hole():
    # four predators in a ring of shared prey give one chordless 4-cycle
    pairs = [("a", "x"), ("b", "x"), ("b", "y"), ("c", "y"), ("c", "z"), ("d", "z"),
             ("d", "w"), ("a", "w")]
    g = drop_isolated(niche_overlap(FoodWeb.from_text("\n".join(" ".join(p) for p in pairs))))
    assert set(g.names) == {"a", "b", "c", "d"}
    stats = enumerate_dfs(g)
    assert (stats.cycles_ge4, stats.triangles) == (1, 0)
