import json
from itertools import combinations

import pytest

from graphModel import Graph, SelfLoop, load_graph, load_labelled


def _make_k4() -> Graph:
    return load_graph(list(combinations(range(4), 2)))


# ---------------------------------------------------------------------------
# load_graph
# ---------------------------------------------------------------------------

def test_load_graph_dedups_reversed_pairs():
    g = load_graph([(0, 1), (1, 0), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.num_edges == 2


def test_load_graph_rejects_self_loop():
    with pytest.raises(SelfLoop, match="0"):
        load_graph([(0, 0)])


def test_load_graph_k4():
    g = _make_k4()
    assert len(g) == 4
    assert g.num_edges == 6
    assert g.is_complete()


def test_adjacency_is_symmetric_and_sorted():
    g = load_graph([(3, 1), (1, 2), (2, 3), (0, 3)])
    for u in g.nodes:
        assert list(g.neighbors(u)) == sorted(g.neighbors(u))
        for v in g.neighbors(u):
            assert u in g.neighbors(v)


def test_negative_ids_rejected():
    with pytest.raises(ValueError, match="non-negative"):
        load_graph([(-1, 2)])


# ---------------------------------------------------------------------------
# Derived graphs
# ---------------------------------------------------------------------------

def test_derived_graphs_leave_original_untouched():
    g = _make_k4()
    smaller = g.without_edges([(1, 0)])
    assert g.has_edge(0, 1)
    assert not smaller.has_edge(0, 1)
    assert smaller.num_edges == 5
    assert g.with_edges([(0, 4)]).degree(4) == 1
    assert len(g.without_nodes([0])) == 3


def test_induced_keeps_only_inner_edges():
    g = load_graph([(0, 1), (1, 2), (2, 3), (3, 0)])
    sub = g.induced([0, 1, 2])
    assert sub.edges() == [(0, 1), (1, 2)]


def test_networkx_round_trip():
    g = _make_k4()
    assert Graph.from_networkx(g.to_networkx()) == g


# ---------------------------------------------------------------------------
# Labels and serialization
# ---------------------------------------------------------------------------

def test_labelled_graph_gets_dense_ids():
    g = load_labelled([("a", "b"), ("b", "c")])
    assert g.nodes == (0, 1, 2)
    assert g.label(2) == "c"


def test_to_dict_from_dict():
    g = load_labelled([("x", "y"), ("y", "z"), ("z", "x")])
    data = json.loads(g.to_json())
    assert data["edges"] == [[0, 1], [0, 2], [1, 2]]
    restored = Graph.from_dict(data)
    assert restored == g
    assert restored.labels == g.labels


def test_relabel_carries_labels_to_new_ids():
    g = load_labelled([("x", "y"), ("y", "z")])
    moved = g.relabel({0: 10, 2: 12})
    assert moved.nodes == (1, 10, 12)
    assert moved.label(10) == "x"
    assert moved.label(1) == "y"
    assert moved.label(12) == "z"
    assert moved.has_edge(10, 1)
