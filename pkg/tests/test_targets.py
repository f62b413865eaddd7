import pytest

from homlab import targets
from homlab.errors import MalformedInputError
from homlab.graph import Graph


def test_catalogue_counts():
    assert targets.path(5).edge_count() == 4
    assert targets.cycle(6).edge_count() == 6
    assert targets.complete(4).edge_count() == 6
    assert targets.reflexive_complete(3).edge_count() == 6
    le = targets.loop_edge()
    assert le.n == 2 and le.edges == frozenset({(0, 0), (0, 1), (1, 1)})
    lp = targets.loop_pendant()
    assert lp.n == 2 and lp.edges == frozenset({(0, 1), (1, 1)})
    oct_t = targets.oct_target()
    assert oct_t.n == 3 and oct_t.has_loop(0) and oct_t.has_edge(1, 2)
    assert targets.c4() == targets.cycle(4)


def test_complement_of_path():
    cop5 = targets.complement_of_path(5)
    assert cop5.edge_count() == 10 - 4
    assert not cop5.has_edge(0, 1) and cop5.has_edge(0, 2)


def test_forbidden_seven_shapes():
    seven = targets.forbidden_seven()
    assert list(seven) == list("abcdefg")
    sizes = {k: (g.n, g.edge_count()) for k, g in seven.items()}
    assert sizes == {
        "a": (2, 3),
        "b": (3, 4),
        "c": (4, 4),
        "d": (4, 5),
        "e": (4, 6),
        "f": (4, 5),
        "g": (4, 6),
    }
    # d has one loop, e has loops on two non-adjacent vertices
    assert sum(seven["d"].has_loop(v) for v in range(4)) == 1
    loops_e = [v for v in range(4) if seven["e"].has_loop(v)]
    assert len(loops_e) == 2 and not seven["e"].has_edge(*loops_e)


def test_by_name():
    assert targets.by_name("P3") == targets.path(3)
    assert targets.by_name("Pk:5") == targets.path(5)
    assert targets.by_name("Ck:6") == targets.cycle(6)
    assert targets.by_name("Kk:4") == targets.complete(4)
    assert targets.by_name("Kk-reflexive:3") == targets.reflexive_complete(3)
    assert targets.by_name("coP:5") == targets.complement_of_path(5)
    assert targets.by_name("loop-edge") == targets.loop_edge()
    assert targets.by_name("oct") == targets.oct_target()
    with pytest.raises(MalformedInputError):
        targets.by_name("Q7")
