"""Anticomplete-pair extraction for P5-free graphs, with full traces.

The pipeline mirrors the counting argument it implements: pick the edge
lying on the most induced F4s, split the both-non-neighbours class into
red components, check every component is consistent to the exactly-one
class (an inconsistency hands back an induced P5 instead), discard
components that are small or see few non-edges, and return a surviving
component together with the largest red component of the vertices
anticomplete to it.  When the graph is small relative to the supplied
homogeneous bound m (n <= m**13, which is every desk-scale input), a
single non-edge grown greedily to maximal blue-pure red-connected sides
already meets the contract and the counting machinery never runs.

m is caller-supplied, never recomputed: callers choose the oracle and
the trace records what was believed.  A supplied m below the true
hom(G) can starve the pipeline of surviving components; that surfaces
as PipelineDiagnostic carrying the trace, never as a silent repair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .detect import (
    EdgeNeighborhoodPartition,
    count_f4_on_edge,
    edge_neighborhoods,
    find_induced_f4,
)
from .graph import (
    BLUE,
    RED,
    Graph,
    PairWitness,
    bit,
    bits,
    components,
    is_consistent,
    largest_component,
    lowest,
    mixed_witness,
)
from .oracle import _greedy_clique
from .witness import F4Witness, HomWitness, P5Witness


@dataclass
class ComponentRecord:
    members: int
    size: int
    nonedge_count: int
    small: bool
    low_degree: bool


@dataclass
class PairFinderTrace:
    n: int
    m: int
    s: int
    branch: str = "full"  # "trivial" | "full" | "p5"
    chosen_edge: tuple[int, int] | None = None
    big_m: int | None = None
    component_records: list[ComponentRecord] = field(default_factory=list)
    selected: int | None = None
    b_prime: int = 0
    premises: dict[str, bool] = field(default_factory=dict)
    floor_holds: dict[str, bool] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "s": self.s,
            "branch": self.branch,
            "chosen_edge": list(self.chosen_edge) if self.chosen_edge else None,
            "M": self.big_m,
            "components": [
                {
                    "vertices": sorted(bits(r.members)),
                    "size": r.size,
                    "nonedge_count": r.nonedge_count,
                    "small": r.small,
                    "low_degree": r.low_degree,
                }
                for r in self.component_records
            ],
            "selected": self.selected,
            "b_prime": sorted(bits(self.b_prime)),
            "premises": self.premises,
            "floor_holds": self.floor_holds,
        }


@dataclass
class PairOutcome:
    kind: str  # "pair" | "trivial" | "p5"
    pair: PairWitness | None
    p5: P5Witness | None
    trace: PairFinderTrace


class PipelineDiagnostic(RuntimeError):
    """No surviving component (or too many): the supplied m was too small."""

    def __init__(self, reason: str, trace: PairFinderTrace, evidence: int = 0):
        super().__init__(reason)
        self.reason = reason
        self.trace = trace
        self.evidence = evidence  # vertex mask backing the diagnosis, if any


def hom_from_f4_free(g: Graph, m: int) -> HomWitness | F4Witness:
    """Homogeneous set of size >= m in an F4-free graph on >= m**3 vertices.

    Constructive version of the Turan argument: a greedy clique already
    works unless some vertex has more than m**2 non-neighbours, in which
    case those non-neighbours induce a disjoint union of cliques (any
    induced P3 there plus the vertex would be an F4), and the larger of
    its biggest clique and one-vertex-per-clique independent set has
    size at least m.  An F4 in the input is returned as the
    counterexample certificate instead.
    """
    if m < 1:
        raise ValueError("m must be positive")
    f4 = find_induced_f4(g)
    if f4 is not None:
        return f4
    if g.n < m**3:
        raise ValueError(f"need at least m**3={m**3} vertices, got {g.n}")

    clique = _greedy_clique(g, g.full_mask)
    best = HomWitness(members=clique, kind="clique")
    if best.size >= m:
        return best

    nondeg = [g.n - 1 - g.degree(v) for v in range(g.n)]
    v = max(range(g.n), key=lambda u: (nondeg[u], -u))
    non_nbrs = ~g.adj[v] & g.full_mask & ~bit(v)
    comps = components(g, non_nbrs, RED)
    for comp in comps:
        for u in bits(comp):
            assert g.adj[u] & comp == comp & ~bit(u), "F4-free forces clique components"
    largest = max(comps, key=lambda c: c.bit_count())
    one_per = 0
    for comp in comps:
        one_per |= comp & -comp
    candidates = [
        best,
        HomWitness(members=largest, kind="clique"),
        HomWitness(members=one_per, kind="independent"),
    ]
    result = max(candidates, key=lambda w: w.size)
    assert result.size >= m, "the two-branch bound cannot fall below m"
    return result


def best_f4_edge(g: Graph) -> tuple[tuple[int, int], int]:
    """Edge with the maximum per-edge F4 count, lexicographic tie-break."""
    best_edge: tuple[int, int] | None = None
    best_count = -1
    for u, v in g.edges():
        c = count_f4_on_edge(g, u, v)
        if c > best_count:
            best_edge, best_count = (u, v), c
    if best_edge is None:
        raise ValueError("graph has no edges")
    return best_edge, best_count


def check_component_consistency(
    g: Graph, enp: EdgeNeighborhoodPartition, comp: int
) -> P5Witness | None:
    """Verify every exactly-one vertex is consistent to a red component.

    comp must be a red component of the both-non-neighbours class of the
    pair (x, y).  A violating vertex v yields the explicit induced path
    u, w, v, then the endpoint adjacent to v, then the other endpoint,
    with (u, w) from the mixed-pair walk inside the component.  On
    P5-free inputs this always returns None.
    """
    if comp.bit_count() == 1:
        return None  # everything is consistent to a single vertex
    for v in bits(enp.n01):
        if is_consistent(g, v, comp) != "inconsistent":
            continue
        u, w = mixed_witness(g, v, comp, RED)
        if g.has_edge(v, enp.x):
            x, y = enp.x, enp.y
        else:
            x, y = enp.y, enp.x
        p5 = P5Witness((u, w, v, x, y))
        assert p5.verify(g), "construction must give an induced P5"
        return p5
    return None


def _grow_blue_pair(g: Graph, u: int, v: int) -> PairWitness:
    """Grow the non-edge (u, v) to maximal red-connected blue-pure sides.

    One vertex per step, lowest label first, left side preferred; a
    candidate must keep its side red-connected (a red edge into it) and
    stay blue to the whole other side.
    """
    a, b = bit(u), bit(v)
    while True:
        grown = False
        for side_is_a in (True, False):
            side, other = (a, b) if side_is_a else (b, a)
            cand = 0
            for w in bits(g.full_mask & ~a & ~b):
                if g.adj[w] & other:
                    continue
                if not g.adj[w] & side:
                    continue
                cand = bit(w)
                break
            if cand:
                if side_is_a:
                    a |= cand
                else:
                    b |= cand
                grown = True
                break
        if not grown:
            break
    if lowest(a) > lowest(b):
        a, b = b, a
    return PairWitness(left=a, right=b, color=BLUE)


def find_anticomplete_pair(g: Graph, m: int) -> PairOutcome:
    """Blue pair with both sides red-connected, or an induced P5.

    Follows the supersaturation pipeline once n > m**13; below that a
    greedily grown least non-edge suffices (the quantitative floor
    n/m**13 is then trivial).  Raises PipelineDiagnostic when the
    pipeline's premises fail, which indicates m < hom(g).
    """
    if m < 1:
        raise ValueError("m must be positive")
    if g.n < 2 or g.is_complete():
        raise ValueError("graph must have a non-edge")
    n = g.n
    s = (m + 1) ** 3
    trace = PairFinderTrace(n=n, m=m, s=s)

    if n <= m**13:
        trace.branch = "trivial"
        u, v = next(g.nonedges())
        pair = _grow_blue_pair(g, u, v)
        assert pair.verify(g)
        return PairOutcome(kind="trivial", pair=pair, p5=None, trace=trace)

    edge, big_m = best_f4_edge(g)
    trace.chosen_edge = edge
    trace.big_m = big_m
    trace.premises["n_gt_m13"] = True
    trace.premises["M_gt_4n2_over_s4"] = big_m * s**4 > 4 * n**2

    enp = edge_neighborhoods(g, *edge)
    comps = components(g, enp.n00, RED)
    trace.premises["k_le_m"] = len(comps) <= m
    if len(comps) > m:
        one_per = 0
        for comp in comps:
            one_per |= comp & -comp
        raise PipelineDiagnostic(
            f"{len(comps)} components exceed m={m}: the one-per-component "
            "independent set proves hom(g) > m",
            trace,
            evidence=one_per,
        )

    for comp in comps:
        p5 = check_component_consistency(g, enp, comp)
        if p5 is not None:
            trace.branch = "p5"
            return PairOutcome(kind="p5", pair=None, p5=p5, trace=trace)

    for comp in comps:
        size = comp.bit_count()
        nonedges = sum((enp.n01 & ~g.adj[c]).bit_count() for c in bits(comp))
        trace.component_records.append(
            ComponentRecord(
                members=comp,
                size=size,
                nonedge_count=nonedges,
                small=size * s**4 * m <= 2 * n,
                low_degree=2 * n * nonedges <= big_m * size,
            )
        )

    survivors = [
        i for i, r in enumerate(trace.component_records) if not r.small and not r.low_degree
    ]
    if not survivors:
        raise PipelineDiagnostic(
            "every component is small or low-degree; supplied m is below hom(g)",
            trace,
        )

    selected = max(
        survivors,
        key=lambda i: Fraction(
            trace.component_records[i].nonedge_count, trace.component_records[i].size
        ),
    )
    trace.selected = selected
    a_side = trace.component_records[selected].members
    b_prime = 0
    for v in bits(enp.n01):
        if not g.adj[v] & a_side:
            b_prime |= bit(v)
    trace.b_prime = b_prime
    assert b_prime, "a surviving component sees at least one non-edge"
    b_side = largest_component(g, b_prime, RED)

    premises_held = all(trace.premises.values())
    trace.floor_holds["a_floor"] = a_side.bit_count() * m**13 >= n
    trace.floor_holds["b_floor"] = b_side.bit_count() * m**13 >= n
    if premises_held and m >= 17:
        # 2*m**13 >= m*(m+1)**12 holds from m = 17 on, so the floors follow.
        assert trace.floor_holds["a_floor"]

    pair = PairWitness(left=a_side, right=b_side, color=BLUE)
    assert pair.verify(g)
    return PairOutcome(kind="pair", pair=pair, p5=None, trace=trace)
