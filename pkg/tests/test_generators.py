from __future__ import annotations

import random

import pytest

from p5hom.detect import find_induced_f4, has_induced_p5, is_cograph
from p5hom.generators import (
    canonical_code,
    enumerate_small_graphs,
    gen_cograph,
    gen_f4_free,
    gen_repair_p5_free,
    gen_split,
    gen_threshold,
    gen_unbalanced_c5_blowup,
    generate,
    substitute,
)
from p5hom.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    union_graphs,
)
from p5hom.io import graph6_encode


def test_substitute_k2_into_k2_gives_k3():
    out = substitute(complete_graph(2), 1, complete_graph(2))
    assert out == complete_graph(3)


def test_substitute_p3_into_2k1():
    out = substitute(empty_graph(2), 0, path_graph(3))
    assert out == union_graphs([empty_graph(1), path_graph(3)])


def test_substitute_k3_into_c5_stays_p5_free():
    out = substitute(cycle_graph(5), 2, complete_graph(3))
    assert out.n == 7
    assert has_induced_p5(out) is None


def test_substitute_counts_and_neighbourhoods():
    host = path_graph(4)
    inner = complete_graph(3)
    out = substitute(host, 1, inner)
    assert out.n == host.n - 1 + inner.n
    # inner block occupies the top labels, each adjacent to v's neighbours
    base = host.n - 1
    for i in range(inner.n):
        nbrs = {u for u in range(out.n) if out.has_edge(base + i, u)}
        inner_nbrs = {base + j for j in range(inner.n) if j != i}
        assert nbrs == inner_nbrs | {0, 1}  # host neighbours of v=1 were 0, 2


def test_substitution_closure_random_sample():
    rng = random.Random("closure-sample")
    families = [gen_cograph, gen_split, gen_threshold]
    for trial in range(40):
        host = rng.choice(families)(rng.randint(2, 14), trial)
        inner = rng.choice(families)(rng.randint(1, 14), trial + 1000)
        v = rng.randrange(host.n)
        assert has_induced_p5(substitute(host, v, inner)) is None


def test_gen_cograph_properties():
    for seed in range(8):
        g = gen_cograph(1 + seed * 4 + 1, seed)
        assert is_cograph(g)
        assert has_induced_p5(g) is None
    assert gen_cograph(1, 0).n == 1


def test_gen_split_edge_cases():
    assert gen_split(1, 0).n == 1
    for seed in range(8):
        g = gen_split(30, seed)
        assert has_induced_p5(g) is None


def test_gen_threshold_cases():
    assert gen_threshold(1, 0) == empty_graph(1)
    for seed in range(8):
        assert has_induced_p5(gen_threshold(40, seed)) is None


def test_blowup_c5_base():
    g = gen_unbalanced_c5_blowup(5, 0)
    assert g == cycle_graph(5)


def test_blowup_profiles():
    g = gen_unbalanced_c5_blowup(9, 1, fill="empty")
    assert has_induced_p5(g) is None
    g2 = gen_unbalanced_c5_blowup(20, 2, profile=(2, 2, 2, 2, 12), fill="clique")
    assert g2.n == 20
    assert has_induced_p5(g2) is None
    with pytest.raises(ValueError):
        gen_unbalanced_c5_blowup(10, 0, profile=(1, 1, 1, 1, 2))


def test_gen_f4_free():
    for seed in range(10):
        g = gen_f4_free(25, seed)
        assert find_induced_f4(g) is None


def test_gen_repair():
    assert gen_repair_p5_free(10, 0.0, 1) == empty_graph(10)
    assert gen_repair_p5_free(10, 1.0, 1) == complete_graph(10)
    g = gen_repair_p5_free(30, 0.2, 3)
    assert g is not None
    assert has_induced_p5(g) is None
    assert gen_repair_p5_free(30, 0.5, 3, max_iters=1) is None


def test_generate_dispatch():
    g = generate("cograph", 12, 3)
    assert is_cograph(g)
    with pytest.raises(ValueError):
        generate("nope", 5, 0)


def test_determinism_same_seed_same_graph6():
    for name in ("cograph", "split", "threshold", "c5_blowup", "f4_free"):
        a = graph6_encode(generate(name, 23, 5))
        b = graph6_encode(generate(name, 23, 5))
        assert a == b
    assert graph6_encode(generate("split", 23, 5)) != graph6_encode(
        generate("split", 23, 6)
    )


def test_canonical_code_isomorphism_invariant():
    g = path_graph(5)
    relabeled = Graph.from_edges(5, [(3, 1), (1, 4), (4, 0), (0, 2)])
    assert canonical_code(g) == canonical_code(relabeled)
    assert canonical_code(g) != canonical_code(cycle_graph(5))


def test_enumerate_small_graphs_counts():
    # 1, 2, 4, 11, 34 non-isomorphic graphs on 1..5 vertices
    for n, count in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)]:
        graphs = enumerate_small_graphs(n)
        assert len(graphs) == count
        codes = {canonical_code(g) for g in graphs}
        assert len(codes) == count
