from __future__ import annotations

import pytest

from p5hom import cotree
from p5hom.graph import complete_graph, empty_graph, path_graph, union_graphs


def test_node_splices_same_op_children():
    t = cotree.node("union", [0, ("union", (1, 2))])
    assert t == ("union", (0, 1, 2))


def test_node_collapses_singleton():
    assert cotree.node("join", [3]) == 3


def test_children_sorted_by_min_leaf():
    t = cotree.node("join", [("union", (4, 5)), 1])
    assert t == ("join", (1, ("union", (4, 5))))
    assert cotree.is_canonical(t)


def test_realize_join_and_union():
    k3 = cotree.realize(("join", (0, 1, 2)))
    assert k3 == complete_graph(3)
    e3 = cotree.realize(("union", (0, 1, 2)))
    assert e3 == empty_graph(3)


def test_realize_2k2():
    t = ("union", (("join", (0, 1)), ("join", (2, 3))))
    assert cotree.realize(t) == union_graphs([complete_graph(2), complete_graph(2)])


def test_realize_compresses_labels():
    # leaves 2, 7: realize produces a 2-vertex graph
    t = ("join", (2, 7))
    assert cotree.realize(t) == complete_graph(2)


def test_json_roundtrip():
    t = ("union", (0, ("join", (1, ("union", (2, 3)))), 4))
    data = cotree.to_json(t)
    assert data == ["union", 0, ["join", 1, ["union", 2, 3]], 4]
    assert cotree.from_json(data) == t
    with pytest.raises(ValueError):
        cotree.from_json(["join", 1])
    with pytest.raises(ValueError):
        cotree.from_json(["frob", 1, 2, 3])


def test_substitute_leaves():
    t = ("join", (0, 5))
    out = cotree.substitute_leaves(t, {5: ("union", (5, 6))})
    assert out == ("join", (0, ("union", (5, 6))))
    assert cotree.realize(out) == cotree.realize(("join", (0, ("union", (1, 2)))))


def test_relabel():
    t = ("union", (0, 1))
    assert cotree.relabel(t, {0: 3, 1: 2}) == ("union", (2, 3))


def test_is_canonical_rejections():
    assert not cotree.is_canonical(("union", (0,)))
    assert not cotree.is_canonical(("union", (0, ("union", (1, 2)))))
    assert not cotree.is_canonical(("join", (2, ("union", (0, 1)))))


def test_duplicate_leaves_rejected():
    with pytest.raises(ValueError):
        cotree.realize(("join", (0, ("union", (0, 1)))))


def test_realize_path_free():
    # cotrees can never produce a P4
    from p5hom.detect import is_cograph

    t = ("join", (("union", (0, 1, 2)), ("union", (3, ("join", (4, 5))))))
    g = cotree.realize(t)
    assert is_cograph(g)
    assert g != path_graph(6)
