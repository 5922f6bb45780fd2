"""Immutable bitset graphs and the vertex-set algebra everything else runs on.

Vertices are ``0..n-1``.  A vertex set is a plain Python int used as a
bitmask, so all set operations (union, intersection, difference,
complement) are single word-parallel integer operations.  Following the
two-colouring convention used throughout this package, an edge is "red"
and a non-edge is "blue"; most operations take a ``color`` argument and
treat blue adjacency as the complement of red, computed on the fly.

Deterministic tie-breaking is a hard rule here: components are listed by
smallest member, candidates are scanned in label order, and every
"largest" choice breaks ties toward the smallest minimum label.  This is
what makes witnesses and goldens reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

RED = "red"
BLUE = "blue"
MIXED = "mixed"
INCONSISTENT = "inconsistent"


def bit(v: int) -> int:
    return 1 << v


def bits(mask: int) -> Iterator[int]:
    """Iterate set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    """Index of the lowest set bit.  Mask must be nonzero."""
    if not mask:
        raise ValueError("empty mask")
    return (mask & -mask).bit_length() - 1


class Graph:
    """Simple undirected graph with packed bit-row adjacency.

    Immutable after construction: no self-loops, symmetric adjacency.
    Equality and hashing are by (n, adjacency), i.e. labelled equality.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has out-of-range bits")
            if row & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = rows
        self._hash = hash((n, rows))

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, rows)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ordered pairs (u, v), u < v, in lexicographic order."""
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1)
            for off in bits(higher):
                yield (u, u + 1 + off)

    def nonedges(self) -> Iterator[tuple[int, int]]:
        full = self.full_mask
        for u in range(self.n):
            missing = (full & ~self.adj[u] & ~(1 << u)) >> (u + 1)
            for off in bits(missing):
                yield (u, u + 1 + off)

    def neighbors(self, v: int, color: str = RED, within: int | None = None) -> int:
        """Neighbourhood of v as a mask; blue = complement adjacency."""
        scope = self.full_mask if within is None else within
        if color == RED:
            return self.adj[v] & scope
        if color == BLUE:
            return ~self.adj[v] & scope & ~(1 << v)
        raise ValueError(f"bad color {color!r}")

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple((~row & full & ~(1 << v)) for v, row in enumerate(self.adj)))

    def is_complete(self) -> bool:
        return all(row == self.full_mask & ~(1 << v) for v, row in enumerate(self.adj))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class PairWitness:
    """Two disjoint vertex sets every cross pair of which has one colour."""

    left: int
    right: int
    color: str

    def verify(self, g: Graph) -> bool:
        if self.left & self.right or not self.left or not self.right:
            return False
        return pair_color(g, self.left, self.right) == self.color


def induced(g: Graph, s: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on mask s plus the map from new labels to old.

    New vertex i is the i-th smallest member of s, so
    ``induced(induced(g, s)[0], t)`` composes with label translation.
    """
    if s & ~g.full_mask:
        raise ValueError("mask has bits outside the graph")
    labels = tuple(bits(s))
    index = {old: new for new, old in enumerate(labels)}
    rows = []
    for old in labels:
        row = 0
        for w in bits(g.adj[old] & s):
            row |= 1 << index[w]
        rows.append(row)
    return Graph(len(labels), rows), labels


def components(g: Graph, within: int, color: str = RED) -> list[int]:
    """Maximal connected sets of ``within`` under the colour's adjacency.

    Returned in order of smallest member; the empty mask gives [].
    """
    out: list[int] = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.neighbors(v, color, rest)
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def largest_component(g: Graph, within: int, color: str = RED) -> int:
    """Largest component, ties broken by smallest minimum label."""
    comps = components(g, within, color)
    if not comps:
        raise ValueError("empty vertex set")
    return max(comps, key=lambda c: c.bit_count())


def pair_color(g: Graph, s: int, t: int) -> str:
    """red if every cross pair is an edge, blue if none is, else mixed."""
    if not s or not t:
        raise ValueError("pair sides must be nonempty")
    if s & t:
        raise ValueError("pair sides overlap")
    if s.bit_count() > t.bit_count():
        s, t = t, s
    all_red = True
    all_blue = True
    for v in bits(s):
        row = g.adj[v]
        if row & t != t:
            all_red = False
        if row & t:
            all_blue = False
        if not (all_red or all_blue):
            return MIXED
    return RED if all_red else BLUE


def is_consistent(g: Graph, v: int, s: int) -> str:
    """Colour of v against s if monochromatic, else "inconsistent"."""
    if not s:
        raise ValueError("target set must be nonempty")
    if s & bit(v):
        raise ValueError(f"vertex {v} lies inside the target set")
    row = g.adj[v]
    if row & s == s:
        return RED
    if not row & s:
        return BLUE
    return INCONSISTENT


def mixed_witness(g: Graph, v: int, c: int, color: str = RED) -> tuple[int, int]:
    """Adjacent pair (u, w) in c with vw, uw edges and vu a non-edge.

    Edges are taken in the given colour; c must induce a connected
    subgraph in that colour, with v outside c and inconsistent to it.
    Found by walking a shortest path inside c from a non-neighbour to a
    neighbour of v and taking the first flip pair, which the path's
    minimality makes adjacent.
    """
    if c.bit_count() < 2:
        raise ValueError("component must have at least 2 vertices")
    if bit(v) & c:
        raise ValueError("v must lie outside the component")
    nbrs = g.neighbors(v, color, c)
    non = c & ~nbrs
    if not nbrs or not non:
        raise ValueError("v is consistent to the component")
    start = lowest(non)
    goal_set = nbrs
    # BFS with lowest-label expansion; parent links give a deterministic path.
    parent = {start: -1}
    frontier = [start]
    goal = -1
    seen = bit(start)
    while frontier and goal < 0:
        nxt: list[int] = []
        for u in frontier:
            reach = g.neighbors(u, color, c) & ~seen
            seen |= reach
            for w in bits(reach):
                parent[w] = u
                if goal_set & bit(w) and goal < 0:
                    goal = w
                nxt.append(w)
        frontier = nxt
    if goal < 0:
        raise ValueError("component is not connected in the given colour")
    path = [goal]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    path.reverse()  # runs from the non-neighbour to the neighbour of v
    for a, b in zip(path, path[1:]):
        if non & bit(a) and nbrs & bit(b):
            return a, b
    raise AssertionError("path from non-neighbour to neighbour must flip")


@dataclass(frozen=True)
class OneThirdSplit:
    """Either a pure pair with both sides >= |s|/3, or the big component."""

    pair: PairWitness | None
    big_component: int

    @property
    def is_pair(self) -> bool:
        return self.pair is not None


def one_third_split(g: Graph, s: int, color: str = RED) -> OneThirdSplit:
    """Split s by its colour components.

    If the largest component has at most |s|/3 vertices, group the
    components (in smallest-member order) into a prefix of total size at
    least |s|/3 and the rest; both sides then have at least |s|/3
    vertices and no colour edges between them, i.e. they form a pure
    pair of the opposite colour.  Otherwise return the largest
    component.  All comparisons are exact integer arithmetic.
    """
    if not s:
        raise ValueError("empty vertex set")
    comps = components(g, s, color)
    total = s.bit_count()
    big = max(comps, key=lambda c: c.bit_count())
    if 3 * big.bit_count() > total:
        return OneThirdSplit(pair=None, big_component=big)
    prefix = 0
    taken = 0
    for i, comp in enumerate(comps):
        prefix |= comp
        taken += comp.bit_count()
        if 3 * taken >= total:
            rest = s & ~prefix
            other = BLUE if color == RED else RED
            pw = PairWitness(left=prefix, right=rest, color=other)
            assert 3 * rest.bit_count() >= total  # guaranteed by minimality
            return OneThirdSplit(pair=pw, big_component=big)
    raise AssertionError("prefix sum must reach |s|/3")


# Small constructors used by generators and tests.


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def union_graphs(parts: Iterable[Graph]) -> Graph:
    """Disjoint union; part vertices are relabelled consecutively."""
    rows: list[int] = []
    offset = 0
    for g in parts:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, rows)


def join_graphs(parts: Iterable[Graph]) -> Graph:
    """Disjoint union plus all edges between distinct parts."""
    parts = list(parts)
    g = union_graphs(parts)
    n = g.n
    full = (1 << n) - 1
    rows = list(g.adj)
    offset = 0
    for p in parts:
        block = ((1 << p.n) - 1) << offset
        for v in bits(block):
            rows[v] |= full & ~block
        offset += p.n
    return Graph(n, rows)


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    return join_graphs([empty_graph(s) for s in sizes])
