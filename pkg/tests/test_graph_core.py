from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p5hom.graph import (
    BLUE,
    INCONSISTENT,
    MIXED,
    RED,
    Graph,
    bits,
    complete_graph,
    complete_multipartite,
    components,
    cycle_graph,
    empty_graph,
    induced,
    is_consistent,
    mask_of,
    mixed_witness,
    one_third_split,
    pair_color,
    path_graph,
    union_graphs,
)

from .conftest import graphs


def test_graph_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b10])  # asymmetric: 1 not adjacent back to 0
    with pytest.raises(ValueError):
        Graph(1, [0b1])  # self-loop
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])


def test_edges_lexicographic():
    g = path_graph(4)
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert list(g.nonedges()) == [(0, 2), (0, 3), (1, 3)]


def test_induced_p5_odd_vertices_is_empty():
    g = path_graph(5)
    sub, labels = induced(g, mask_of([0, 2, 4]))
    assert sub == empty_graph(3)
    assert labels == (0, 2, 4)


def test_induced_k4_pair_is_k2():
    sub, _ = induced(complete_graph(4), mask_of([1, 3]))
    assert sub == complete_graph(2)


def test_induced_c5_four_consecutive_is_p4():
    # direct adjacency enumeration: on {0,1,2,3} of C5 only the three
    # consecutive pairs are edges, i.e. the path 0-1-2-3
    sub, labels = induced(cycle_graph(5), mask_of([0, 1, 2, 3]))
    assert labels == (0, 1, 2, 3)
    assert sub == path_graph(4)


def test_induced_composes():
    g = cycle_graph(6)
    sub1, lab1 = induced(g, mask_of([0, 2, 3, 4]))
    sub2, lab2 = induced(sub1, mask_of([0, 1, 3]))
    direct, lab = induced(g, mask_of([lab1[i] for i in bits(mask_of([0, 1, 3]))]))
    assert sub2 == direct
    assert tuple(lab1[i] for i in lab2) == lab


def test_components_2k2():
    g = union_graphs([complete_graph(2), complete_graph(2)])
    assert components(g, g.full_mask, RED) == [0b0011, 0b1100]
    assert components(g, g.full_mask, BLUE) == [0b1111]


def test_components_c5_plus_k1():
    g = union_graphs([cycle_graph(5), empty_graph(1)])
    sizes = sorted(c.bit_count() for c in components(g, g.full_mask, RED))
    assert sizes == [1, 5]


def test_components_empty_and_singleton():
    g = path_graph(3)
    assert components(g, 0, RED) == []
    assert components(g, 0b100, RED) == [0b100]


def test_pair_color_cases():
    g = complete_multipartite([2, 3])
    assert pair_color(g, 0b00011, 0b11100) == RED
    g2 = union_graphs([complete_graph(2), complete_graph(2)])
    assert pair_color(g2, 0b0011, 0b1100) == BLUE
    p5 = path_graph(5)
    assert pair_color(p5, mask_of([0]), mask_of([1, 3])) == MIXED
    with pytest.raises(ValueError):
        pair_color(p5, 0b11, 0b10)
    with pytest.raises(ValueError):
        pair_color(p5, 0, 0b10)


def test_is_consistent_cases():
    star = complete_multipartite([1, 3])  # center 0, leaves 1..3
    assert is_consistent(star, 0, mask_of([1, 2, 3])) == RED
    g = union_graphs([path_graph(3), empty_graph(1)])
    assert is_consistent(g, 3, 0b111) == BLUE
    p5 = path_graph(5)
    assert is_consistent(p5, 2, mask_of([1, 4])) == INCONSISTENT
    with pytest.raises(ValueError):
        is_consistent(p5, 2, mask_of([2, 3]))
    with pytest.raises(ValueError):
        is_consistent(p5, 2, 0)


def test_mixed_witness_triangle_plus_pendant():
    # triangle {0,1,2} plus vertex 3 adjacent only to 1
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3)])
    u, w = mixed_witness(g, 3, 0b111)
    assert g.has_edge(u, w) and g.has_edge(3, w) and not g.has_edge(3, u)


def test_mixed_witness_p3_component():
    # path 0-1-2 with v=3 adjacent to 1 and 2 only: enumerating candidate
    # pairs, (0, 1) is the only adjacent pair with v-edge/v-nonedge split
    g = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    assert mixed_witness(g, 3, 0b111) == (0, 1)


def test_mixed_witness_requires_inconsistency():
    g = complete_multipartite([1, 3])
    with pytest.raises(ValueError):
        mixed_witness(g, 0, mask_of([1, 2, 3]))


def test_mixed_witness_blue_color():
    # complement view: v=3 blue-mixed on the blue-connected {0,1,2}
    g = Graph.from_edges(4, [(0, 1), (0, 3)])
    # blue graph has edges {0,2},{1,2},{2,3},{1,3} among others
    u, w = mixed_witness(g, 3, 0b111, BLUE)
    assert not g.has_edge(u, w) and not g.has_edge(3, w) and g.has_edge(3, u)


def test_one_third_split_six_isolated():
    g = empty_graph(6)
    split = one_third_split(g, g.full_mask, RED)
    assert split.is_pair
    # greedy prefix over singleton components: first two vs the rest
    assert split.pair.left == 0b000011
    assert split.pair.right == 0b111100
    assert split.pair.verify(g)


def test_one_third_split_k6():
    g = complete_graph(6)
    split = one_third_split(g, g.full_mask, RED)
    assert not split.is_pair
    assert split.big_component == g.full_mask


def test_one_third_split_3k2():
    g = union_graphs([complete_graph(2)] * 3)
    split = one_third_split(g, g.full_mask, RED)
    assert split.is_pair
    left, right = split.pair.left, split.pair.right
    assert 3 * left.bit_count() >= 6 and 3 * right.bit_count() >= 6
    assert pair_color(g, left, right) == BLUE


@given(graphs(min_n=1, max_n=8), st.sampled_from([RED, BLUE]))
@settings(max_examples=200)
def test_components_partition_and_purity(g: Graph, color: str):
    comps = components(g, g.full_mask, color)
    union = 0
    for c in comps:
        assert union & c == 0
        union |= c
    assert union == g.full_mask
    other = BLUE if color == RED else RED
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            assert pair_color(g, comps[i], comps[j]) == other


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=200)
def test_pair_color_blue_iff_no_cross_edges(g: Graph):
    s = 0b1
    t = g.full_mask & ~1
    crossing = any(g.has_edge(0, v) for v in bits(t))
    assert (pair_color(g, s, t) == BLUE) == (not crossing)


@given(graphs(min_n=3, max_n=8))
@settings(max_examples=300)
def test_mixed_witness_postconditions(g: Graph):
    for comp in components(g, g.full_mask, RED):
        if comp.bit_count() < 2:
            continue
        for v in bits(g.full_mask & ~comp):
            if is_consistent(g, v, comp) != INCONSISTENT:
                continue
            u, w = mixed_witness(g, v, comp, RED)
            assert comp & (1 << u) and comp & (1 << w)
            assert g.has_edge(u, w)
            assert g.has_edge(v, w)
            assert not g.has_edge(v, u)


@given(graphs(min_n=1, max_n=8), st.sampled_from([RED, BLUE]))
@settings(max_examples=200)
def test_one_third_split_bounds(g: Graph, color: str):
    total = g.n
    split = one_third_split(g, g.full_mask, color)
    if split.is_pair:
        assert 3 * split.pair.left.bit_count() >= total
        assert 3 * split.pair.right.bit_count() >= total
        assert split.pair.verify(g)
    else:
        assert 3 * split.big_component.bit_count() > total
