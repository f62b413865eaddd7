import pytest

from homlab.errors import MalformedInputError, WeightOverflowError
from homlab.graph import Graph
from homlab.weights import (
    INT64_MAX,
    ListAssignment,
    NEG_INF,
    WeightModel,
    ext_add,
    ext_lt,
    ext_max,
    format_ext,
    parse_ext,
)


def test_neg_inf_absorbs_and_orders():
    assert ext_add(NEG_INF, 5) is NEG_INF
    assert ext_add(3, 4, NEG_INF, 1) is NEG_INF
    assert ext_lt(NEG_INF, -(10**17))
    assert not ext_lt(0, NEG_INF)
    assert not ext_lt(NEG_INF, NEG_INF)
    assert ext_max([NEG_INF, -2, 7]) == 7
    assert ext_max([NEG_INF, NEG_INF]) is NEG_INF


def test_overflow_is_loud():
    with pytest.raises(WeightOverflowError):
        ext_add(INT64_MAX, 1)
    with pytest.raises(WeightOverflowError):
        WeightModel(vertex={(0, 0): 2**63})


def test_format_parse():
    assert format_ext(NEG_INF) == "-inf"
    assert parse_ext("-inf") is NEG_INF
    assert parse_ext("-12") == -12


def test_edge_lookup_orientation_insensitive():
    w = WeightModel(edge={((1, 0), (3, 2)): 9})
    assert w.edge_weight((0, 1), (2, 3)) == 9
    assert w.edge_weight((1, 0), (3, 2)) == 9
    assert w.edge_weight((0, 1), (0, 0)) == 0  # default
    assert w.vertex_weight(5, 5) == 0


def test_weight_text_roundtrip():
    w = WeightModel(
        vertex={(0, 1): 4, (2, 0): NEG_INF},
        edge={((0, 1), (1, 2)): -3},
    )
    again = WeightModel.from_text(w.to_text())
    assert again.vertex_weight(0, 1) == 4
    assert again.vertex_weight(2, 0) is NEG_INF
    assert again.edge_weight((1, 0), (2, 1)) == -3


def test_lists():
    g = Graph(3, [(0, 1)])
    h = Graph(2, [(0, 1)])
    lists = ListAssignment(g, h, {0: [1], 2: []})
    assert lists.get(0) == {1}
    assert lists.get(1) == {0, 1}  # unspecified defaults to full
    assert lists.get(2) == frozenset()  # empty is representable
    assert lists.total_size() == 3
    with pytest.raises(MalformedInputError):
        ListAssignment(g, h, {0: [7]})
    again = ListAssignment.from_text(lists.to_text(), g, h)
    assert [again.get(v) for v in range(3)] == [lists.get(v) for v in range(3)]
