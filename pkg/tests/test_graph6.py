import networkx as nx
import pytest
from hypothesis import given, settings

from kkmin.graph import Graph
from kkmin.graph6 import from_adjacency_text, from_graph6, read_graph, to_adjacency_text, to_graph6

from conftest import graphs, nx_graph


def reference_graph6(g):
    return nx.to_graph6_bytes(nx_graph(g), header=False).decode().strip()


@settings(max_examples=80)
@given(graphs(max_n=20))
def test_encoding_matches_reference(g):
    assert to_graph6(g) == reference_graph6(g)


@given(graphs(max_n=20))
def test_round_trip(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_adjacency_text(to_adjacency_text(g)) == g
    assert read_graph(to_graph6(g)) == g
    assert read_graph(to_adjacency_text(g)) == g


def test_large_order_round_trip():
    g = Graph.from_edges(70, [(i, (i * 7 + 3) % 70) for i in range(70) if i != (i * 7 + 3) % 70])
    assert to_graph6(g) == reference_graph6(g)
    assert from_graph6(to_graph6(g)) == g


def test_known_encodings():
    assert to_graph6(Graph.complete(4)) == "C~"
    assert from_graph6(">>graph6<<C~") == Graph.complete(4)


@pytest.mark.parametrize("bad", ["C", "C~~", "C\x7f", ""])
def test_malformed(bad):
    with pytest.raises(ValueError):
        from_graph6(bad)
