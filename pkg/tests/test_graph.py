import pytest

from homlab.errors import MalformedInputError
from homlab.graph import Graph


def test_basic_adjacency():
    g = Graph(4, [(0, 1), (1, 2), (2, 2)])
    assert g.neighbors(1) == {0, 2}
    assert g.degree(1) == 2
    assert g.degree(3) == 0
    # loop puts the vertex into its own neighborhood and adds 1 to degree
    assert 2 in g.neighbors(2)
    assert g.degree(2) == 2
    assert g.has_edge(2, 2) and g.has_edge(1, 0)


def test_duplicate_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count() == 1


def test_out_of_range_rejected():
    with pytest.raises(MalformedInputError):
        Graph(2, [(0, 2)])
    with pytest.raises(MalformedInputError):
        Graph(-1)


def test_text_roundtrip():
    g = Graph(5, [(0, 1), (2, 2), (3, 4)])
    again = Graph.from_text(g.to_text())
    assert again == g
    with_comments = "# a graph\nn 2\n\ne 0 1\n"
    assert Graph.from_text(with_comments) == Graph(2, [(0, 1)])


def test_text_rejects_garbage():
    with pytest.raises(MalformedInputError):
        Graph.from_text("e 0 1\n")
    with pytest.raises(MalformedInputError):
        Graph.from_text("n 2\nq 1\n")


def test_components_and_bipartition():
    g = Graph(6, [(0, 1), (1, 2), (3, 4)])
    comps = g.components()
    assert sorted(sorted(c) for c in comps) == [[0, 1, 2], [3, 4], [5]]
    a, b = g.bipartition()
    assert {0, 2} <= a and 1 in b
    assert Graph(3, [(0, 1), (1, 2), (0, 2)]).bipartition() is None
    assert Graph(1, [(0, 0)]).bipartition() is None


def test_induced_relabels():
    g = Graph(5, [(0, 2), (2, 4), (1, 3)])
    sub, idx = g.induced([0, 2, 4])
    assert sub.n == 3
    assert sub.edges == frozenset({(0, 1), (1, 2)})
    assert idx == {0: 0, 2: 1, 4: 2}
