"""Induced-pattern detectors, F4 counting, and cograph recognition.

The path detectors run an ordered DFS over candidate masks, so the first
hit is the lexicographically least witness (in the tuple order of the
witness, with the canonical orientation first endpoint < last endpoint).
``has_induced_p5`` is the fast path for large instances: it contracts
twin classes first, which preserves presence of every induced path and
usually collapses the structured P5-free families to a few vertices.

F4 counting goes through the per-edge identity: an F4 containing an edge
e = xy consists of xy as its path edge plus one vertex adjacent to
exactly one endpoint and one adjacent to neither, those two non-adjacent.
So the count at e is the number of non-edges between the exactly-one and
the neither classes, and every F4 is counted once at each of its two
edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cotree
from .graph import BLUE, RED, Graph, bit, bits, components, induced
from .witness import F4Witness, P4Witness, P5Witness


@dataclass(frozen=True)
class EdgeNeighborhoodPartition:
    """Classes of vertices by adjacency to the two endpoints of a pair.

    n00: adjacent to neither endpoint; n11: adjacent to both;
    n01: adjacent to exactly one.  Together with {x, y} these
    partition the vertex set.
    """

    x: int
    y: int
    n00: int
    n11: int
    n01: int


def edge_neighborhoods(g: Graph, x: int, y: int) -> EdgeNeighborhoodPartition:
    if x == y:
        raise ValueError("endpoints must be distinct")
    rest = g.full_mask & ~bit(x) & ~bit(y)
    ax = g.adj[x]
    ay = g.adj[y]
    return EdgeNeighborhoodPartition(
        x=x,
        y=y,
        n00=rest & ~ax & ~ay,
        n11=rest & ax & ay,
        n01=rest & (ax ^ ay),
    )


def count_f4_on_edge(g: Graph, x: int, y: int) -> int:
    """Number of induced F4s whose path edge is xy.

    Equals the number of non-edges between n01(xy) and n00(xy).
    """
    if not g.has_edge(x, y):
        raise ValueError(f"({x},{y}) is not an edge")
    enp = edge_neighborhoods(g, x, y)
    a, b = enp.n01, enp.n00
    if a.bit_count() > b.bit_count():
        a, b = b, a
    return sum((b & ~g.adj[v]).bit_count() for v in bits(a))


def count_f4_total(g: Graph) -> int:
    """Exact number of vertex 4-subsets inducing an F4.

    Computed by summing the per-edge identity over all edges; each copy
    has exactly two edges, so the sum is twice the total.
    """
    twice = sum(count_f4_on_edge(g, u, v) for u, v in g.edges())
    assert twice % 2 == 0
    return twice // 2


def find_induced_p5(g: Graph, within: int | None = None) -> P5Witness | None:
    """Lexicographically least induced P5 (orientation v1 < v5), or None."""
    vs = _find_path(g, 5, g.full_mask if within is None else within)
    return P5Witness(vs) if vs is not None else None


def find_induced_p4(g: Graph, within: int | None = None) -> P4Witness | None:
    vs = _find_path(g, 4, g.full_mask if within is None else within)
    return P4Witness(vs) if vs is not None else None


def _find_path(g: Graph, k: int, scope: int) -> tuple | None:
    """Ordered DFS for an induced path on k vertices inside scope.

    Explores extensions in label order, so the first complete path is
    the lexicographically least; the last vertex must exceed the first
    (canonical orientation), which halves the search.
    """
    adj = g.adj
    path: list[int] = []

    def extend(candidates: int, banned: int) -> tuple | None:
        depth = len(path)
        for v in bits(candidates):
            if depth == k - 1 and v < path[0]:
                continue
            path.append(v)
            if depth == k - 1:
                return tuple(path)
            nxt = adj[v] & scope & ~banned
            found = extend(nxt, banned | adj[v] | bit(v))
            if found is not None:
                return found
            path.pop()
        return None

    for v0 in bits(scope):
        path = [v0]
        found = extend(adj[v0] & scope, bit(v0) | adj[v0])
        if found is not None:
            return found
    return None


def find_induced_f4(g: Graph) -> F4Witness | None:
    """Lexicographically least induced F4 (a,b,c,d), a < c, or None."""
    adj = g.adj
    full = g.full_mask
    for a in range(g.n):
        for b in bits(adj[a]):
            # c adjacent to b, not to a, above a for canonical orientation
            for c in bits(adj[b] & ~adj[a] & ~bit(a)):
                if c < a:
                    continue
                d_mask = full & ~adj[a] & ~adj[b] & ~adj[c] & ~bit(a) & ~bit(b) & ~bit(c)
                if d_mask:
                    d = (d_mask & -d_mask).bit_length() - 1
                    return F4Witness((a, b, c, d))
    return None


def twin_reduce(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Contract twin classes to lowest-label representatives, to fixpoint.

    Two vertices are twins when they have the same neighbours outside
    the pair (adjacent or not between themselves).  No induced path on
    >= 4 vertices contains two twins, so contraction preserves the
    presence and absence of induced P4/P5, and any witness found in the
    reduced graph is a witness in the original.
    """
    alive = g.full_mask
    while True:
        seen: set[tuple[str, int]] = set()
        keep = 0
        for v in bits(alive):
            row = g.adj[v] & alive
            k_false = ("f", row)
            k_true = ("t", row | bit(v))
            if k_false in seen or k_true in seen:
                continue
            seen.add(k_false)
            seen.add(k_true)
            keep |= bit(v)
        if keep == alive:
            break
        alive = keep
    sub, labels = induced(g, alive)
    return sub, labels


def has_induced_p5(g: Graph) -> P5Witness | None:
    """Fast induced-P5 existence with a concrete witness.

    Twin-reduces first, then searches the reduced graph.  The witness is
    valid for the original graph but not necessarily lexicographically
    least; use find_induced_p5 when the canonical witness matters.
    """
    reduced, labels = twin_reduce(g)
    vs = _find_path(reduced, 5, reduced.full_mask)
    if vs is None:
        return None
    return P5Witness(tuple(labels[v] for v in vs))


def cograph_recognize(g: Graph) -> cotree.CotreeNode | P4Witness:
    """Canonical cotree of g, or an induced P4 certifying there is none.

    Recursively splits on red components, then blue components; a piece
    with >= 2 vertices connected in both colours contains an induced P4.
    """
    if g.n == 0:
        raise ValueError("empty graph has no cotree")

    def rec(mask: int) -> cotree.CotreeNode | P4Witness:
        if mask.bit_count() == 1:
            return (mask & -mask).bit_length() - 1
        red = components(g, mask, RED)
        if len(red) > 1:
            children = []
            for comp in red:
                sub = rec(comp)
                if isinstance(sub, P4Witness):
                    return sub
                children.append(sub)
            return cotree.node(cotree.UNION, children)
        blue = components(g, mask, BLUE)
        if len(blue) > 1:
            children = []
            for comp in blue:
                sub = rec(comp)
                if isinstance(sub, P4Witness):
                    return sub
                children.append(sub)
            return cotree.node(cotree.JOIN, children)
        p4 = find_induced_p4(g, within=mask)
        assert p4 is not None, "connected + co-connected piece must contain a P4"
        return p4

    return rec(g.full_mask)


def is_cograph(g: Graph) -> bool:
    return not isinstance(cograph_recognize(g), P4Witness)
