import networkx as nx
import pytest
from hypothesis import given

from tokengraphs import (
    Graph,
    ParameterError,
    complete_graph,
    cycle_graph,
    from_edge_list,
    from_graph6,
    path_graph,
    to_dot,
    to_edge_list,
    to_graph6,
)
from tokengraphs.formats import GRAPH6_HEADER

from conftest import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_known_strings():
    # reference values from the graph6 format description
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(Graph(0, [])) == "?"
    assert to_graph6(path_graph(2)) == "A_"


@given(graphs(min_n=0, max_n=12))
def test_graph6_matches_networkx(g):
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert from_graph6(ours) == g


def test_large_n_forms():
    big = cycle_graph(100)
    text = to_graph6(big)
    assert text.startswith("~")
    assert from_graph6(text) == big
    assert text == nx.to_graph6_bytes(to_nx(big), header=False).decode().strip()


def test_header_roundtrip():
    g = cycle_graph(7)
    assert from_graph6(to_graph6(g, header=True)) == g
    assert to_graph6(g, header=True).startswith(GRAPH6_HEADER)


@pytest.mark.parametrize("bad", ["", ":Fa@x^", "&C~", "C~~", "C", "C\x7f"])
def test_graph6_rejects(bad):
    with pytest.raises(ParameterError):
        from_graph6(bad)


def test_dot_labels():
    text = to_dot(path_graph(3), labels=lambda v: f"v{v}")
    assert '1 [label="v0"];' in text
    assert "1 -- 2;" in text and "2 -- 3;" in text
    assert text.startswith("graph G {")


def test_edge_list_roundtrip_and_errors():
    g = cycle_graph(5)
    assert from_edge_list(to_edge_list(g)) == g
    assert from_edge_list("# comment\n1 2\n\n2 3 # trailing\n", n=4).n == 4
    for bad in ["1 2 3", "a b", "0 1", "1 2\n2 1", "1 1"]:
        with pytest.raises(ParameterError):
            from_edge_list(bad)
    with pytest.raises(ParameterError):
        from_edge_list("1 5", n=3)
