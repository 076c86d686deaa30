import pytest

from hypertrace import (
    Graph,
    build_hypergraph,
    parse_graph_text,
    parse_hypergraph_text,
    random_gnp,
    random_hypergraph,
    serialize_graph,
    serialize_hypergraph,
)
from hypertrace.errors import FormatError
from hypertrace.io import sniff_kind


def test_parse_p4():
    text = "# a path\np graph 4 3\n0 1\n1 2\n2 3\n"
    G = parse_graph_text(text)
    assert G == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def test_parse_one_based():
    text = "p graph 3 2 1\n1 2\n2 3\n"
    assert parse_graph_text(text) == Graph.from_edges(3, [(0, 1), (1, 2)])


def test_parse_rejects_self_loop_with_line_number():
    with pytest.raises(FormatError, match="line 3: self-loop"):
        parse_graph_text("p graph 3 2\n0 1\n2 2\n")


def test_parse_warns_on_duplicate_edge():
    with pytest.warns(UserWarning, match="duplicate edge"):
        parse_graph_text("p graph 2 2\n0 1\n1 0\n")


def test_parse_rejects_malformed():
    with pytest.raises(FormatError):
        parse_graph_text("p graph x 3\n")
    with pytest.raises(FormatError, match="two vertex ids"):
        parse_graph_text("p graph 3 1\n0 1 2\n")
    with pytest.raises(FormatError, match="out of range"):
        parse_graph_text("p graph 2 1\n0 2\n")
    with pytest.raises(FormatError):
        parse_graph_text("")


def test_parse_edge_count_mismatch():
    with pytest.raises(FormatError, match="expected 2 edge lines"):
        parse_graph_text("p graph 3 2\n0 1\n")


def test_empty_edge_section():
    assert parse_graph_text("p graph 3 0\n").edge_count == 0


def test_parse_hypergraph():
    H = parse_hypergraph_text("p hgraph 3 3\n0 1\n1 2\n0 2\n")
    assert H == build_hypergraph(3, [{0, 1}, {1, 2}, {0, 2}])


def test_parse_hypergraph_collapses_duplicates():
    with pytest.warns(UserWarning, match="duplicate edge collapsed"):
        H = parse_hypergraph_text("p hgraph 2 2\n0 1\n1 0\n")
    assert H.m == 1


def test_parse_hypergraph_multi_keeps_duplicates():
    H = parse_hypergraph_text("p hgraph 2 2\n0 1\n1 0\n", allow_multi=True)
    assert H.m == 2


def test_parse_hypergraph_out_of_range():
    with pytest.raises(FormatError, match="out of range"):
        parse_hypergraph_text("p hgraph 2 1\n0 2\n")


def test_serialize_rejects_empty_edge():
    H = build_hypergraph(2, [set(), {0}])
    with pytest.raises(ValueError, match="empty edges"):
        serialize_hypergraph(H)


def test_round_trip_graphs():
    for seed in range(30):
        G = random_gnp(seed % 9 + 1, 0.4, seed=seed)
        assert parse_graph_text(serialize_graph(G)) == G
        assert parse_graph_text(serialize_graph(G, base=1)) == G


def test_round_trip_hypergraphs():
    for seed in range(30):
        n = seed % 7 + 2
        H = random_hypergraph(n, seed % n, seed % 4 + 1, seed=seed)
        assert parse_hypergraph_text(serialize_hypergraph(H)) == H


def test_sniff_kind():
    assert sniff_kind("p graph 2 0\n") == "graph"
    assert sniff_kind("# x\np hgraph 2 0\n") == "hgraph"
    with pytest.raises(FormatError):
        sniff_kind("hello\n")
