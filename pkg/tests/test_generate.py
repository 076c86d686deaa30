import pytest

from hypertrace import generate, random_gnp, random_hypergraph, random_tree


def test_tree_is_tree_and_deterministic():
    for n in (1, 2, 3, 10, 50):
        G1 = random_tree(n, seed=1)
        G2 = random_tree(n, seed=1)
        assert G1 == G2
        assert G1.is_tree
        assert G1.edge_count == n - 1
    assert random_tree(10, seed=1) != random_tree(10, seed=2)


def test_gnp_extremes():
    assert random_gnp(5, 0.0, seed=3).edge_count == 0
    assert random_gnp(5, 1.0, seed=3).edge_count == 10


def test_gnp_deterministic():
    assert random_gnp(8, 0.4, seed=9) == random_gnp(8, 0.4, seed=9)


def test_gnp_rejects_bad_p():
    with pytest.raises(ValueError):
        random_gnp(3, 1.5)


def test_hypergraph_simple_counts():
    H = random_hypergraph(6, 10, max_edge_size=3, seed=4)
    assert H.m == 10
    assert H.is_simple
    assert all(1 <= len(e) <= 3 for e in H.edges)


def test_hypergraph_impossible_request():
    with pytest.raises(ValueError, match="distinct nonempty edges"):
        random_hypergraph(3, 8, seed=0)
    assert random_hypergraph(3, 7, seed=0).m == 7


def test_hypergraph_multi_allows_duplicates():
    H = random_hypergraph(2, 20, max_edge_size=1, seed=5, allow_multi=True)
    assert H.m == 20
    assert H.has_duplicate_edges


def test_hypergraph_deterministic():
    assert random_hypergraph(7, 9, 3, seed=11) == random_hypergraph(7, 9, 3, seed=11)


def test_generate_dispatch():
    assert generate("tree", {"n": 5}, seed=1) == random_tree(5, seed=1)
    assert generate("gnp", {"n": 5, "p": 0.3}, seed=1) == random_gnp(5, 0.3, seed=1)
    assert generate("hypergraph", {"n": 5, "m": 4, "max_edge_size": 2}, seed=1) == random_hypergraph(
        5, 4, 2, seed=1
    )
    with pytest.raises(ValueError):
        generate("mystery", {}, seed=0)
