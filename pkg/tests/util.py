"""Independent brute-force oracles used to cross-check the package.

Everything here enumerates subsets directly with itertools and checks
adjacency pair by pair, on purpose: these functions must stay obviously
correct and share no code path with the implementations they check.
"""

from __future__ import annotations

from itertools import combinations

from p5hom.graph import Graph, mask_of


def _induced_degrees(g: Graph, subset: tuple[int, ...]) -> list[int]:
    return [sum(1 for u in subset if u != v and g.has_edge(u, v)) for v in subset]


def _edge_count(g: Graph, subset: tuple[int, ...]) -> int:
    return sum(1 for u, v in combinations(subset, 2) if g.has_edge(u, v))


def is_induced_f4(g: Graph, subset: tuple[int, ...]) -> bool:
    # two edges sharing an endpoint plus an isolated vertex
    return _edge_count(g, subset) == 2 and max(_induced_degrees(g, subset)) == 2


def is_induced_path(g: Graph, subset: tuple[int, ...]) -> bool:
    k = len(subset)
    if _edge_count(g, subset) != k - 1:
        return False
    degs = sorted(_induced_degrees(g, subset))
    if degs != [1, 1] + [2] * (k - 2):
        return False
    # k-1 edges with max degree 2 and two endpoints: a path iff connected
    seen = {subset[0]}
    frontier = [subset[0]]
    while frontier:
        v = frontier.pop()
        for u in subset:
            if u not in seen and g.has_edge(u, v):
                seen.add(u)
                frontier.append(u)
    return len(seen) == k


def brute_count_f4(g: Graph) -> int:
    return sum(1 for sub in combinations(range(g.n), 4) if is_induced_f4(g, sub))


def brute_count_f4_on_edge(g: Graph, x: int, y: int) -> int:
    assert g.has_edge(x, y)
    rest = [v for v in range(g.n) if v not in (x, y)]
    return sum(1 for u, w in combinations(rest, 2) if is_induced_f4(g, (x, y, u, w)))


def brute_has_p5(g: Graph) -> bool:
    return any(is_induced_path(g, sub) for sub in combinations(range(g.n), 5))


def brute_has_p4(g: Graph) -> bool:
    return any(is_induced_path(g, sub) for sub in combinations(range(g.n), 4))


def brute_hom_size(g: Graph) -> int:
    best = 1
    for k in range(g.n, 0, -1):
        if k <= best:
            break
        for sub in combinations(range(g.n), k):
            ec = _edge_count(g, sub)
            if ec == 0 or ec == k * (k - 1) // 2:
                best = max(best, k)
                break
    return best


def brute_largest_cograph_size(g: Graph) -> int:
    for k in range(g.n, 0, -1):
        for sub in combinations(range(g.n), k):
            if not any(brute_p4_inside(g, sub)):
                return k
    return 0


def brute_p4_inside(g: Graph, subset: tuple[int, ...]):
    for four in combinations(subset, 4):
        if is_induced_path(g, four):
            yield four


def mask(vs) -> int:
    return mask_of(vs)
