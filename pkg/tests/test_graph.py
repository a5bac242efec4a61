import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from boxikit.errors import InputError
from boxikit.graph import (
    BoxRepresentation,
    CompletionSet,
    Interval,
    LabeledGraph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    format_rational,
    induced_subgraph,
    intersection_graph,
    join_graphs,
    path_graph,
    representation_to_graph,
    star_graph,
    strip_universal,
    universal_vertices,
)


def random_graph(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return LabeledGraph.from_index_pairs([f"v{i}" for i in range(n)], [p for p, b in zip(pairs, bits) if b])


graphs = st.composite(random_graph)


def test_rejects_bad_graphs():
    with pytest.raises(InputError):
        LabeledGraph(("a", "a"), np.zeros((2, 2), bool))
    with pytest.raises(InputError):
        LabeledGraph(("a",), np.ones((1, 1), bool))
    with pytest.raises(InputError):
        LabeledGraph(("a", "b"), np.array([[0, 1], [0, 0]], bool))
    with pytest.raises(InputError):
        LabeledGraph(("a", "b"), np.zeros((3, 3), bool))


def test_labels_and_indices_do_not_collide():
    # numeric labels must not be mistaken for positions
    g = LabeledGraph.from_edges(["2", "1", "0"], [("2", "1")])
    assert g.has_edge("2", "1") and not g.has_edge("1", "0")
    assert LabeledGraph.from_json(g.to_json()) == g


def test_adjacency_is_read_only():
    g = path_graph(3)
    with pytest.raises(ValueError):
        g.adj[0, 2] = True


def test_edges_sorted_and_counted():
    g = cycle_graph(4)
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert g.non_edges() == [(0, 2), (1, 3)]
    assert g.edge_count == 4


def test_join_examples():
    k2 = join_graphs([complete_graph(1, "a"), complete_graph(1, "b")])
    assert k2.is_complete() and k2.n == 2
    c4 = join_graphs([empty_graph(2, "a"), empty_graph(2, "b")])
    assert c4.edge_count == 4 and all(d == 2 for d in c4.degrees())
    with pytest.raises(InputError):
        join_graphs([path_graph(2), path_graph(2)])


def test_intersection_checks_labels():
    a = LabeledGraph.from_edges(["x", "y"], [("x", "y")])
    b = LabeledGraph.from_edges(["x", "z"], [])
    with pytest.raises(InputError, match="'z'"):
        intersection_graph([a, b])


def test_disjoint_boxes_do_not_meet():
    rep = BoxRepresentation(2, {"a": ((0, 1), (0, 1)), "b": ((2, 3), (0, 1))})
    assert not representation_to_graph(rep, ["a", "b"]).has_edge("a", "b")


def test_touching_boxes_meet():
    rep = BoxRepresentation(1, {"a": ((0, 1),), "b": ((1, 2),)})
    assert representation_to_graph(rep, ["a", "b"]).has_edge("a", "b")


def test_rationals():
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-4, 6)) == "-2/3"
    with pytest.raises(InputError):
        Interval(0.5, 1)
    with pytest.raises(InputError):
        Interval(2, 1)


def test_unit_lengths_checked():
    with pytest.raises(InputError):
        BoxRepresentation(1, {"a": ((0, 1),), "b": ((0, 2),)}, (1,))


def test_representation_json_round_trip():
    rep = BoxRepresentation(2, {"a": ((Fraction(1, 3), 1), (0, 0)), "b": ((-2, 5), (0, 7))})
    text = json.dumps(rep.to_json())
    assert BoxRepresentation.from_json(json.loads(text)) == rep
    assert '"1/3"' in text


def test_completion_set_rejects_edges():
    g = path_graph(3)
    with pytest.raises(InputError):
        CompletionSet(g, frozenset({("v0", "v1")}))
    c = CompletionSet(g, frozenset({("v2", "v0")}))
    assert c.sorted_pairs() == [("v0", "v2")]
    assert c.graph().is_complete()


def test_universal_vertices():
    s = star_graph(3)
    assert universal_vertices(s) == ["v0"]
    assert strip_universal(s).edge_count == 0


@given(graphs())
def test_graph_json_round_trip(g):
    assert LabeledGraph.from_json(json.loads(json.dumps(g.to_json()))) == g


@given(graphs(), st.data())
def test_induced_subgraph_keeps_adjacency(g, data):
    keep = data.draw(st.lists(st.sampled_from(g.vertices), unique=True))
    h = induced_subgraph(g, keep)
    for u in h.vertices:
        for v in h.vertices:
            if u != v:
                assert h.has_edge(u, v) == g.has_edge(u, v)


@given(graphs(6), graphs(6))
@settings(max_examples=40)
def test_join_and_union_are_complementary(a, b):
    b = b.relabel({v: "w" + v for v in b.vertices})
    j = join_graphs([a, b])
    u = disjoint_union([a, b])
    assert j.edge_count - u.edge_count == a.n * b.n
