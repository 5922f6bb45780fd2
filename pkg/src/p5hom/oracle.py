"""Exact ground-truth oracles, trusted only at desk scale.

hom_exact runs branch-and-bound maximum clique (greedy-colouring upper
bound) on the graph and on its complement and keeps the larger witness;
hom_subsets re-derives the same value by straight subset enumeration so
the two can cross-check each other in tests.  largest_cograph_exact does
a subset DP over all vertex masks.  Size caps protect against accidental
exponential blowups and can be overridden with the P5HOM_LIMITS
environment variable, e.g. ``P5HOM_LIMITS=hom=96,cograph=18``.
"""

from __future__ import annotations

import os

from . import cotree
from .detect import cograph_recognize
from .graph import BLUE, RED, Graph, bit, bits, components, induced
from .witness import CographWitness, HomWitness, P4Witness

DEFAULT_LIMITS = {"hom": 64, "cograph": 16, "hom_subsets": 20}


def limits() -> dict[str, int]:
    caps = dict(DEFAULT_LIMITS)
    raw = os.environ.get("P5HOM_LIMITS", "")
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        name, _, value = part.partition("=")
        if name not in caps or not value.isdigit():
            raise ValueError(f"bad P5HOM_LIMITS entry {part!r}")
        caps[name] = int(value)
    return caps


class SizeLimitError(ValueError):
    """Input exceeds an exact-oracle cap; use the heuristic path instead."""


def es_floor(n: int) -> int:
    """Universal homogeneous-set floor: the least k with 4**k >= n.

    Quantitative Ramsey gives hom(G) >= k whenever n >= 4**(k-1), and
    this k equals ceil(log2(n)/2), computed here in exact integers.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = 0
    while 4**k < n:
        k += 1
    return k


def _greedy_clique(g: Graph, within: int) -> int:
    """Clique mask by repeatedly taking the max-degree candidate."""
    clique = 0
    cand = within
    while cand:
        best = max(bits(cand), key=lambda v: ((g.adj[v] & cand).bit_count(), -v))
        clique |= bit(best)
        cand &= g.adj[best]
    return clique


def hom_greedy(g: Graph) -> HomWitness:
    """Cheap homogeneous set: greedy clique vs greedy independent set."""
    if g.n == 0:
        raise ValueError("empty graph")
    clique = _greedy_clique(g, g.full_mask)
    indep = _greedy_clique(g.complement(), g.full_mask)
    if indep.bit_count() > clique.bit_count():
        return HomWitness(members=indep, kind="independent")
    return HomWitness(members=clique, kind="clique")


def max_clique_bnb(g: Graph) -> int:
    """Exact maximum clique as a mask, branch-and-bound.

    Upper bound is a greedy colouring of the candidate set; vertices are
    branched in reverse colouring order, the classical scheme.
    """
    best = _greedy_clique(g, g.full_mask)  # warm start
    best_size = best.bit_count()
    adj = g.adj

    def color_sort(cand: int) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                out.append((v, color))
                avail &= ~adj[v] & ~bit(v)
                rest &= ~bit(v)
        return out

    def expand(current: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        order = color_sort(cand)
        for v, color in reversed(order):
            if size + color <= best_size:
                return
            chosen = current | bit(v)
            rest = cand & adj[v]
            if size + 1 > best_size:
                best, best_size = chosen, size + 1
            if rest:
                expand(chosen, size + 1, rest)
            cand &= ~bit(v)

    if g.n:
        expand(0, 0, g.full_mask)
    return best


def hom_exact(g: Graph, limit: int | None = None) -> HomWitness:
    """Maximum homogeneous set with witness, via B&B on g and complement."""
    cap = limits()["hom"] if limit is None else limit
    if g.n > cap:
        raise SizeLimitError(
            f"n={g.n} exceeds hom oracle cap {cap}; use hom_greedy or raise P5HOM_LIMITS"
        )
    if g.n == 0:
        raise ValueError("empty graph")
    clique = max_clique_bnb(g)
    indep = max_clique_bnb(g.complement())
    if indep.bit_count() > clique.bit_count():
        return HomWitness(members=indep, kind="independent")
    return HomWitness(members=clique, kind="clique")


def hom_subsets(g: Graph, limit: int | None = None) -> HomWitness:
    """Independent second oracle: enumerate all vertex subsets."""
    cap = limits()["hom_subsets"] if limit is None else limit
    if g.n > cap:
        raise SizeLimitError(f"n={g.n} exceeds subset-enumeration cap {cap}")
    if g.n == 0:
        raise ValueError("empty graph")
    best_mask, best_kind, best_size = 0, "clique", 0
    for mask in range(1, 1 << g.n):
        size = mask.bit_count()
        if size <= best_size:
            continue
        is_clique = True
        is_indep = True
        for v in bits(mask):
            row = g.adj[v] & mask
            if row != mask & ~bit(v):
                is_clique = False
            if row:
                is_indep = False
            if not (is_clique or is_indep):
                break
        if is_clique:
            best_mask, best_kind, best_size = mask, "clique", size
        elif is_indep:
            best_mask, best_kind, best_size = mask, "independent", size
    return HomWitness(members=best_mask, kind=best_kind)


def cograph_subset_table(g: Graph) -> list[bool]:
    """is-cograph flag for every vertex mask, by the component DP."""
    table = [False] * (1 << g.n)
    for mask in range(1 << g.n):
        if mask.bit_count() <= 1:
            table[mask] = True
            continue
        red = components(g, mask, RED)
        if len(red) > 1:
            table[mask] = all(table[c] for c in red)
            continue
        blue = components(g, mask, BLUE)
        if len(blue) > 1:
            table[mask] = all(table[c] for c in blue)
        # connected in both colours: not a cograph
    return table


def largest_cograph_exact(g: Graph, limit: int | None = None) -> CographWitness:
    """Maximum-size induced cograph with cotree, by subset enumeration.

    Ties go to the lexicographically smallest vertex set.
    """
    cap = limits()["cograph"] if limit is None else limit
    if g.n > cap:
        raise SizeLimitError(
            f"n={g.n} exceeds cograph oracle cap {cap}; raise P5HOM_LIMITS to override"
        )
    if g.n == 0:
        raise ValueError("empty graph")
    table = cograph_subset_table(g)
    best_mask = 1
    best_size = 1
    for mask in range(1, 1 << g.n):
        if not table[mask]:
            continue
        size = mask.bit_count()
        if size > best_size:
            best_mask, best_size = mask, size
        elif size == best_size and tuple(bits(mask)) < tuple(bits(best_mask)):
            best_mask = mask
    sub, labels = induced(g, best_mask)
    tree = cograph_recognize(sub)
    assert not isinstance(tree, P4Witness)
    tree = cotree.relabel(tree, {i: labels[i] for i in range(len(labels))})
    return CographWitness(members=best_mask, tree=tree)
