"""Instance generators for the test and bench corpus.

Every generator verifies its own output against the relevant freeness
detector before returning; a generator returning a graph IS the
assertion that the graph is P5-free (or F4-free for gen_f4_free).
All randomness flows through one seeded Random instance per call, so
identical (params, seed) give byte-identical graph6 output.

The P5-free families: random cotrees (P4-free), split and threshold
graphs (2K2-free, and a P5 contains an induced 2K2), unbalanced
five-cycle blow-ups with P5-free parts (substitution keeps a prime
P5-free host P5-free), substitution products, and a repair loop that
deletes one P5 edge at a time from a random graph.
"""

from __future__ import annotations

import random

from . import cotree
from .detect import find_induced_f4, find_induced_p5, has_induced_p5, is_cograph
from .graph import (
    Graph,
    bits,
    complete_graph,
    complete_multipartite,
    empty_graph,
    union_graphs,
)


class GeneratorError(RuntimeError):
    """A generated instance failed its freeness check (generator bug)."""


def _check_p5_free(g: Graph, what: str) -> Graph:
    w = has_induced_p5(g)
    if w is not None:
        raise GeneratorError(f"{what} produced an induced P5 at {w.vertices}")
    return g


def substitute(host: Graph, v: int, inner: Graph) -> Graph:
    """Replace vertex v of host by a copy of inner.

    Vertices of host other than v keep their relative order and occupy
    0..host.n-2; the inner copy occupies the top inner.n labels, each of
    its vertices adjacent to exactly the host-neighbours of v.
    """
    if not 0 <= v < host.n:
        raise ValueError(f"vertex {v} not in host")
    keep = [u for u in range(host.n) if u != v]
    index = {old: i for i, old in enumerate(keep)}
    n = host.n - 1 + inner.n
    edges: list[tuple[int, int]] = []
    for a, b in host.edges():
        if v in (a, b):
            continue
        edges.append((index[a], index[b]))
    host_nbrs = [index[u] for u in bits(host.adj[v])]
    base = host.n - 1
    for a, b in inner.edges():
        edges.append((base + a, base + b))
    for i in range(inner.n):
        for u in host_nbrs:
            edges.append((base + i, u))
    return Graph.from_edges(n, edges)


def gen_cograph(n: int, seed: int) -> Graph:
    """Random cograph via a random cotree, recognizer-verified."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(f"cograph:{n}:{seed}")

    def build(labels: list[int], op: str) -> cotree.CotreeNode:
        if len(labels) == 1:
            return labels[0]
        k = rng.randint(2, min(len(labels), 4))
        cuts = sorted(rng.sample(range(1, len(labels)), k - 1))
        pieces = []
        prev = 0
        for cut in cuts + [len(labels)]:
            pieces.append(labels[prev:cut])
            prev = cut
        other = cotree.UNION if op == cotree.JOIN else cotree.JOIN
        return cotree.node(op, [build(p, other) for p in pieces])

    root_op = rng.choice((cotree.UNION, cotree.JOIN))
    tree = build(list(range(n)), root_op)
    g = cotree.realize(tree)
    if not is_cograph(g):
        raise GeneratorError("cotree realization failed recognition")
    return g


def gen_split(n: int, seed: int) -> Graph:
    """Random split graph: a clique, an independent set, random cross edges."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(f"split:{n}:{seed}")
    k = rng.randint(0, n)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for v in range(k, n):
        for u in range(k):
            if rng.random() < 0.5:
                edges.append((u, v))
    return _check_p5_free(Graph.from_edges(n, edges), "gen_split")


def gen_threshold(n: int, seed: int) -> Graph:
    """Random threshold graph: iterated isolated/dominating additions."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(f"threshold:{n}:{seed}")
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        if rng.random() < 0.5:  # dominating
            edges.extend((u, v) for u in range(v))
    return _check_p5_free(Graph.from_edges(n, edges), "gen_threshold")


def gen_unbalanced_c5_blowup(
    n: int, seed: int, profile: tuple[int, ...] | None = None, fill: str = "cograph"
) -> Graph:
    """Blow-up of a five-cycle with P5-free parts, one part dominant.

    Default profile (1, 1, 1, 1, n-4); consecutive parts are completely
    joined.  fill chooses the graph placed inside each part: "cograph"
    (random), "empty", or "clique".
    """
    if n < 5:
        raise ValueError("need n >= 5")
    sizes = profile if profile is not None else (1, 1, 1, 1, n - 4)
    if len(sizes) != 5 or any(s < 1 for s in sizes) or sum(sizes) != n:
        raise ValueError(f"bad blow-up profile {sizes!r} for n={n}")
    parts: list[Graph] = []
    for i, s in enumerate(sizes):
        if fill == "empty" or s == 1:
            parts.append(empty_graph(s))
        elif fill == "clique":
            parts.append(complete_graph(s))
        elif fill == "cograph":
            parts.append(gen_cograph(s, seed * 5 + i))
        else:
            raise ValueError(f"unknown fill {fill!r}")
    g = union_graphs(parts)
    rows = list(g.adj)
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    blocks = [((1 << sizes[i]) - 1) << offsets[i] for i in range(5)]
    for i in range(5):
        j = (i + 1) % 5
        for v in bits(blocks[i]):
            rows[v] |= blocks[j]
        for v in bits(blocks[j]):
            rows[v] |= blocks[i]
    return _check_p5_free(Graph(g.n, rows), "gen_unbalanced_c5_blowup")


def gen_f4_free(n: int, seed: int) -> Graph:
    """F4-free instance: a clique union or a complete multipartite graph."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(f"f4free:{n}:{seed}")
    sizes: list[int] = []
    left = n
    while left:
        s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    if rng.random() < 0.5:
        g = union_graphs([complete_graph(s) for s in sizes])
    else:
        g = complete_multipartite(sizes)
    f4 = find_induced_f4(g)
    if f4 is not None:
        raise GeneratorError(f"gen_f4_free produced an F4 at {f4.vertices}")
    return g


def gen_repair_p5_free(
    n: int, p: float, seed: int, max_iters: int | None = None
) -> Graph | None:
    """Start at G(n, p) and delete the second path edge of each found P5.

    The repair choice (drop the v2-v3 edge of the lexicographically
    least witness) is one valid flip among many, fixed for determinism.
    Returns None when the iteration budget runs out before freeness.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(f"repair:{n}:{seed}")
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    budget = max_iters if max_iters is not None else 10 * n * n
    g = Graph(n, rows)
    for _ in range(budget):
        w = find_induced_p5(g)
        if w is None:
            return _check_p5_free(g, "gen_repair_p5_free")
        _, v2, v3, _, _ = w.vertices
        rows[v2] &= ~(1 << v3)
        rows[v3] &= ~(1 << v2)
        g = Graph(n, rows)
    return None


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Plain G(n, p), for oracle-equivalence corpora (no freeness claim)."""
    rng = random.Random(f"gnp:{n}:{seed}:{p}")
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


GENERATORS = {
    "cograph": gen_cograph,
    "split": gen_split,
    "threshold": gen_threshold,
    "c5_blowup": gen_unbalanced_c5_blowup,
    "f4_free": gen_f4_free,
}


def generate(name: str, n: int, seed: int, **params) -> Graph:
    """Dispatch by generator name (the manifest entry format)."""
    if name == "repair":
        g = gen_repair_p5_free(n, params.pop("p", 0.2), seed, **params)
        if g is None:
            raise GeneratorError("repair budget exhausted")
        return g
    if name == "gnp":
        return random_graph(n, params.pop("p", 0.5), seed)
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}")
    return GENERATORS[name](n, seed, **params)


# ---------------------------------------------------------------------------
# Exhaustive canonical enumeration of small graphs


def _wl_classes(g: Graph) -> list[list[int]]:
    """1-WL colour classes, ordered by a label-independent colour key."""
    colors: list = [g.degree(v) for v in range(g.n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        palette = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [palette[k] for k in keys]
        if new == colors:
            break
        colors = new
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(colors[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_code(g: Graph) -> int:
    """Minimum edge bitcode over colour-respecting vertex orderings.

    Isomorphic graphs share the code: WL classes are isomorphism
    invariants and every ordering within classes is tried.
    """
    from itertools import permutations, product

    classes = _wl_classes(g)
    n = g.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    best: int | None = None
    for per_class in product(*[permutations(c) for c in classes]):
        order: list[int] = []
        for blk in per_class:
            order.extend(blk)
        code = 0
        for k, (i, j) in enumerate(pairs):
            if g.has_edge(order[i], order[j]):
                code |= 1 << k
        if best is None or code < best:
            best = code
    assert best is not None
    return best


def _from_code(n: int, code: int) -> Graph:
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if code >> k & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def enumerate_small_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism, by incremental extension.

    Counts for n = 1..7: 1, 2, 4, 11, 34, 156, 1044.
    """
    if n < 1:
        raise ValueError("n must be positive")
    reps = {0}  # canonical codes at the current size
    for size in range(2, n + 1):
        nxt: set[int] = set()
        for code in reps:
            base = _from_code(size - 1, code)
            for nb in range(1 << (size - 1)):
                rows = list(base.adj) + [nb]
                for u in bits(nb):
                    rows[u] |= 1 << (size - 1)
                nxt.add(canonical_code(Graph(size, rows)))
        reps = nxt
    return [_from_code(n, code) for code in sorted(reps)]
