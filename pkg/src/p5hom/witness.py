"""Witness types and their independent checkers.

Every search routine in this package returns an object from this module
(or graph.PairWitness), and each one can be re-verified against the
graph using nothing but graph-core predicates.  ``verify`` is the single
entry point the CLI uses; it never trusts how a witness was produced.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cotree
from .graph import BLUE, Graph, PairWitness, bits, induced, mask_of


@dataclass(frozen=True)
class P5Witness:
    """Five vertices inducing a path, in path order."""

    vertices: tuple[int, int, int, int, int]

    def verify(self, g: Graph) -> bool:
        return _is_induced_path(g, self.vertices)


@dataclass(frozen=True)
class P4Witness:
    vertices: tuple[int, int, int, int]

    def verify(self, g: Graph) -> bool:
        return _is_induced_path(g, self.vertices)


@dataclass(frozen=True)
class F4Witness:
    """(a, b, c, d): path a-b-c plus isolated d."""

    vertices: tuple[int, int, int, int]

    def verify(self, g: Graph) -> bool:
        a, b, c, d = self.vertices
        if len({a, b, c, d}) != 4:
            return False
        if not (g.has_edge(a, b) and g.has_edge(b, c)):
            return False
        return not (
            g.has_edge(a, c) or g.has_edge(a, d) or g.has_edge(b, d) or g.has_edge(c, d)
        )


@dataclass(frozen=True)
class HomWitness:
    """A clique or an independent set, as a vertex mask."""

    members: int
    kind: str  # "clique" | "independent"

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def verify(self, g: Graph) -> bool:
        if self.kind not in ("clique", "independent"):
            return False
        if self.members & ~g.full_mask:
            return False
        want_clique = self.kind == "clique"
        for v in bits(self.members):
            row = g.adj[v] & self.members
            if want_clique and row != self.members & ~(1 << v):
                return False
            if not want_clique and row:
                return False
        return True


@dataclass(frozen=True)
class CographWitness:
    """A vertex set inducing a cograph, certified by a cotree.

    Cotree leaves carry the original vertex labels of ``members``.
    """

    members: int
    tree: cotree.CotreeNode

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def verify(self, g: Graph) -> bool:
        if self.members & ~g.full_mask or not self.members:
            return False
        if cotree.leaf_mask(self.tree) != self.members:
            return False
        if not cotree.is_canonical(self.tree):
            return False
        sub, _ = induced(g, self.members)
        return cotree.realize(self.tree) == sub


def _is_induced_path(g: Graph, vs: tuple[int, ...]) -> bool:
    k = len(vs)
    if len(set(vs)) != k:
        return False
    if any(v < 0 or v >= g.n for v in vs):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            want = j == i + 1
            if g.has_edge(vs[i], vs[j]) != want:
                return False
    return True


Witness = P5Witness | P4Witness | F4Witness | HomWitness | CographWitness | PairWitness


def verify(g: Graph, w: Witness) -> bool:
    return w.verify(g)


def hom_to_cograph(w: HomWitness) -> CographWitness:
    """Lift a homogeneous set to its trivial cotree."""
    labels = list(bits(w.members))
    if len(labels) == 1:
        return CographWitness(members=w.members, tree=labels[0])
    op = cotree.JOIN if w.kind == "clique" else cotree.UNION
    return CographWitness(members=w.members, tree=cotree.node(op, labels))


def singleton_cograph(v: int) -> CographWitness:
    return CographWitness(members=mask_of([v]), tree=v)


def pair_is_blue(pw: PairWitness) -> bool:
    return pw.color == BLUE
