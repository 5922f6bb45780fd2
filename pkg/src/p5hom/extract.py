"""Cograph extraction for P5-free graphs.

This is the effectivized version of a minimal-counterexample argument.
Where the source argument derives a contradiction from a win condition
(a pure pair with both sides big enough), the algorithm recurses on the
two sides of the exhibited pure pair and glues the results; where it
appeals to criticality (every proper subgraph contains a large cograph),
the algorithm calls itself.  Every structural claim along the way is
re-checked at runtime: a violated claim yields either an induced P5
(returned as a certificate that the input was not P5-free), a strictly
better good pair (retry), or a concrete pure pair to recurse on.

The good-pair maximizer is a local fixed-point search, not a global
lexicographic maximum (no polynomial algorithm for that is known), so
none of the downstream claims are assumed: each one is verified and has
a defined fallback.  Every intermediate cograph lands in a candidate
pool and the largest pooled witness is returned; at desk scale the pool
is what delivers quality, since the asymptotic guarantee is tiny.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field

from . import cotree
from .detect import cograph_recognize
from .graph import (
    BLUE,
    MIXED,
    RED,
    Graph,
    PairWitness,
    bit,
    bits,
    components,
    induced,
    is_consistent,
    largest_component,
    lowest,
    mask_of,
    mixed_witness,
    one_third_split,
    pair_color,
)
from .growth import GrowthFunction, at_least, at_most
from .oracle import hom_greedy, largest_cograph_exact, limits
from .pairfinder import PipelineDiagnostic, find_anticomplete_pair
from .witness import CographWitness, P4Witness, P5Witness, hom_to_cograph


@dataclass(frozen=True)
class GoodPair:
    """Blue pair with both sides red-connected and |a| <= |b|."""

    a: int
    b: int

    def verify(self, g: Graph, scope: int | None = None) -> bool:
        if not self.a or not self.b or self.a & self.b:
            return False
        if self.a.bit_count() > self.b.bit_count():
            return False
        if scope is not None and (self.a | self.b) & ~scope:
            return False
        if pair_color(g, self.a, self.b) != BLUE:
            return False
        return (
            len(components(g, self.a, RED)) == 1 and len(components(g, self.b, RED)) == 1
        )


def _ordered(a: int, b: int) -> GoodPair:
    if (a.bit_count(), lowest(a)) > (b.bit_count(), lowest(b)):
        a, b = b, a
    return GoodPair(a=a, b=b)


def _grow_to_fixpoint(g: Graph, scope: int, a: int, b: int) -> GoodPair:
    """Local good-pair improvement: batch-add every eligible vertex.

    A vertex may join a side when it is blue to the whole other side and
    has a red edge into the side it joins (preserving red connectivity).
    The smaller side is grown first; passes repeat to a fixed point.
    """
    while True:
        if a.bit_count() > b.bit_count():
            a, b = b, a
        outside = scope & ~a & ~b
        add_a = 0
        for w in bits(outside):
            if not g.adj[w] & b and g.adj[w] & a:
                add_a |= bit(w)
        if add_a:
            a |= add_a
            continue
        add_b = 0
        for w in bits(outside):
            if not g.adj[w] & a and g.adj[w] & b:
                add_b |= bit(w)
        if add_b:
            b |= add_b
            continue
        return _ordered(a, b)


def _least_nonedge_in(g: Graph, scope: int) -> tuple[int, int] | None:
    for u in bits(scope):
        missing = scope & ~g.adj[u] & ~bit(u)
        missing &= ~((1 << (u + 1)) - 1)  # keep v > u
        if missing:
            return u, lowest(missing)
    return None

def find_good_pair(g: Graph, scope: int | None = None) -> GoodPair | None:
    """Locally maximal good pair, or None when the scope is a clique.

    Seeded from the anticomplete-pair pipeline at top level (a greedily
    grown least non-edge inside a sub-scope), then improved to a local
    fixed point.  Global lexicographic maximality is NOT guaranteed;
    callers re-verify everything they would otherwise derive from it.
    """
    full_scope = scope is None or scope == g.full_mask
    the_scope = g.full_mask if scope is None else scope
    seed = _least_nonedge_in(g, the_scope)
    if seed is None:
        return None
    a = b = 0
    if full_scope:
        m = max(1, hom_greedy(g).size)
        try:
            out = find_anticomplete_pair(g, m)
            if out.pair is not None:
                a, b = out.pair.left, out.pair.right
        except PipelineDiagnostic:
            pass
    if not a:
        a, b = bit(seed[0]), bit(seed[1])
    gp = _grow_to_fixpoint(g, the_scope, a, b)
    assert gp.verify(g, the_scope)
    return gp


# ---------------------------------------------------------------------------
# Main-claim outcomes


@dataclass(frozen=True)
class MainClaimPartition:
    """The (A, Blu, Red, Err) quadruple with its guarantees recorded."""

    a: int
    blu: int
    red: int
    err: int
    blue_degree_cap: float

    def verify(self, g: Graph, scope: int) -> bool:
        parts = [self.a, self.blu, self.red, self.err]
        union = 0
        for p in parts:
            if union & p:
                return False
            union |= p
        if union != scope:
            return False
        if self.err.bit_count() > self.a.bit_count():
            return False
        if self.blu and pair_color(g, self.a, self.blu) != BLUE:
            return False
        if self.red and pair_color(g, self.a, self.red) != RED:
            return False
        cap = math.floor(self.blue_degree_cap + 1e-12)
        for u in bits(self.red):
            if (~g.adj[u] & self.blu).bit_count() > cap:
                return False
        return True


@dataclass(frozen=True)
class P5Found:
    witness: P5Witness


@dataclass(frozen=True)
class PurePairFound:
    pair: PairWitness


@dataclass(frozen=True)
class RPartiteFound:
    parts: tuple[int, ...]
    color: str


@dataclass(frozen=True)
class BetterPair:
    pair: GoodPair


MainClaimOutcome = MainClaimPartition | P5Found | PurePairFound | RPartiteFound | BetterPair


def _p5(vs: tuple[int, int, int, int, int], g: Graph) -> P5Found:
    w = P5Witness(vs)
    assert w.verify(g), f"claim-violation construction must induce a P5: {vs}"
    return P5Found(w)


def build_main_claim(
    g: Graph, scope: int, gp: GoodPair, gf: GrowthFunction, n_top: int
) -> MainClaimOutcome:
    """Run the structural claim chain for one working subgraph.

    scope is the current working vertex set (the whole graph at top
    level); thresholds are evaluated at n_top, the size of the graph the
    iteration started from.  Returns the partition when every check and
    size bound holds, otherwise the documented fallback outcome.
    """
    a, b = gp.a, gp.b
    a_size = a.bit_count()

    # Consistency classification of everything outside the pair.
    x_cls = c_cls = d_cls = e_cls = 0
    for v in bits(scope & ~a & ~b):
        ca = is_consistent(g, v, a)
        cb = is_consistent(g, v, b)
        if ca == BLUE and cb == BLUE:
            x_cls |= bit(v)
        elif ca == RED and cb == RED:
            d_cls |= bit(v)
        elif ca == RED and cb == "inconsistent":
            c_cls |= bit(v)
        elif cb == RED and ca == "inconsistent":
            e_cls |= bit(v)
        elif ca == "inconsistent" and cb == "inconsistent":
            ua, wa = mixed_witness(g, v, a, RED)
            ub, wb = mixed_witness(g, v, b, RED)
            return _p5((ua, wa, v, wb, ub), g)
        elif ca == BLUE:
            # blue to a, red edge into b: (a, b + v) is a better good pair
            return BetterPair(_ordered(a, b | bit(v)))
        else:
            return BetterPair(_ordered(a | bit(v), b))

    # Cap on the all-blue class.
    if not at_most(x_cls.bit_count(), gf.x_cap(n_top, a_size)):
        x_comps = components(g, x_cls, RED)
        biggest = max(x_comps, key=lambda cmp: cmp.bit_count())
        if biggest.bit_count() > a_size:
            return BetterPair(_ordered(biggest, b))
        return RPartiteFound(parts=tuple(x_comps), color=BLUE)

    a_prime = largest_component(g, a, BLUE)
    b_prime = largest_component(g, b, BLUE)

    # Refine against the blue cores: red to both cores lands in d_pr,
    # which may absorb vertices from either cross class.
    d_pr = c_pr = e_pr = 0
    for v in bits(c_cls | d_cls | e_cls):
        row = g.adj[v]
        if row & a_prime == a_prime and row & b_prime == b_prime:
            d_pr |= bit(v)
        elif c_cls & bit(v):
            c_pr |= bit(v)
        else:
            e_pr |= bit(v)

    cb_pr = 0
    for v in bits(c_pr):
        if ~g.adj[v] & e_pr:
            cb_pr |= bit(v)
    eb_pr = 0
    for v in bits(e_pr):
        if ~g.adj[v] & c_pr:
            eb_pr |= bit(v)

    # Blue-side purity of the cross classes.
    for v in bits(cb_pr):
        if g.adj[v] & b_prime:  # not blue to the blue core of b
            r_, b_ = mixed_witness(g, v, b_prime, BLUE)
            u = lowest(~g.adj[v] & e_pr)
            b2 = lowest(~g.adj[u] & a)
            return _p5((b2, v, r_, u, b_), g)
    for u in bits(eb_pr):
        if g.adj[u] & a_prime:
            r2, b2 = mixed_witness(g, u, a_prime, BLUE)
            v = lowest(~g.adj[u] & c_pr)
            bb = lowest(~g.adj[v] & b)
            return _p5((bb, u, r2, v, b2), g)

    if cb_pr:
        # Cross-blue classes must be empty; a nonempty one either improves
        # the pair through the biggest red block of b's blue core, or
        # hands back the pure pair of the two largest cross blue blocks.
        b_dd = largest_component(g, b_prime, RED)
        cand = _ordered(a | cb_pr, b_dd)
        if cand.a.bit_count() > a_size:
            return BetterPair(cand)
        c_blk = largest_component(g, cb_pr, BLUE)
        e_blk = largest_component(g, eb_pr, BLUE)
        col = pair_color(g, c_blk, e_blk)
        if col != MIXED:
            return PurePairFound(PairWitness(left=c_blk, right=e_blk, color=col))
        # Mixed blocks contain a P5; hunt the inconsistent vertex.
        for v in bits(c_blk):
            if is_consistent(g, v, e_blk) == "inconsistent":
                r_, b_ = mixed_witness(g, v, e_blk, BLUE)
                u = lowest(a_prime)
                w = lowest(b_prime)
                return _p5((u, v, r_, w, b_), g)
        for v2 in bits(e_blk):
            if is_consistent(g, v2, c_blk) == "inconsistent":
                r_, b_ = mixed_witness(g, v2, c_blk, BLUE)
                u2 = lowest(b_prime)
                w2 = lowest(a_prime)
                return _p5((u2, v2, r_, w2, b_), g)
        raise AssertionError("mixed pure-pair check must expose an inconsistent vertex")

    # cb_pr empty forces eb_pr empty: no blue edges between the classes.
    assert not eb_pr

    d_ddash = 0
    for v in bits(d_pr):
        if ~g.adj[v] & a:
            d_ddash |= bit(v)

    # Err-block vertices must be red to the c-class core.
    for y in bits(d_ddash):
        bad = ~g.adj[y] & c_pr
        if not bad:
            continue
        x = lowest(bad)
        if not g.adj[x] & b_prime:  # x blue to b's blue core
            b_dd = largest_component(g, b_prime, RED)
            cand = _ordered(a | bit(x), b_dd)
            if cand.a.bit_count() > a_size:
                return BetterPair(cand)
            return PurePairFound(
                PairWitness(left=a | bit(x), right=b_prime, color=BLUE)
            )
        b1, b2 = mixed_witness(g, x, b_prime, BLUE)
        aa = lowest(~g.adj[y] & a)
        return _p5((aa, x, b1, y, b2), g)

    a_out = a
    blu_out = b | x_cls
    red_out = c_pr | (d_pr & ~d_ddash)
    err_out = d_ddash | e_pr

    # Size and degree guarantees, each with its documented fallback.
    if not at_least(a_size, gf.medium_floor(n_top)):
        return PurePairFound(PairWitness(left=a, right=b, color=BLUE))
    if not at_least(blu_out.bit_count(), gf.large_floor(n_top)):
        return PurePairFound(PairWitness(left=a, right=blu_out, color=BLUE))
    if not red_out or not at_least(red_out.bit_count(), gf.large_floor(n_top)):
        if red_out:
            return PurePairFound(PairWitness(left=a, right=red_out, color=RED))
        return PurePairFound(PairWitness(left=a, right=blu_out, color=BLUE))
    if err_out.bit_count() > a_size:
        resp = b_prime | c_pr
        assert pair_color(g, err_out, resp) == RED
        return PurePairFound(PairWitness(left=err_out, right=resp, color=RED))

    cap = gf.blue_degree_cap(n_top, a_size)
    for u in bits(red_out):
        nbl = ~g.adj[u] & blu_out
        if at_most(nbl.bit_count(), cap):
            continue
        n_comps = components(g, nbl, RED)
        biggest = max(n_comps, key=lambda cmp: cmp.bit_count())
        if biggest.bit_count() > a_size:
            return BetterPair(_ordered(a | bit(u), biggest))
        return RPartiteFound(parts=tuple(n_comps), color=BLUE)

    part = MainClaimPartition(
        a=a_out,
        blu=blu_out,
        red=red_out,
        err=err_out,
        blue_degree_cap=cap,
    )
    assert part.verify(g, scope)
    return part


# ---------------------------------------------------------------------------
# Cograph combination


def combine_pure(
    g: Graph, gf: GrowthFunction, w1: CographWitness, w2: CographWitness, color: str
) -> CographWitness:
    """Glue two cographs across a pure pair; order adds exactly."""
    if w1.members & w2.members:
        raise ValueError("witnesses overlap")
    if pair_color(g, w1.members, w2.members) != color:
        raise ValueError("pair is not pure in the stated colour")
    op = cotree.JOIN if color == RED else cotree.UNION
    out = CographWitness(
        members=w1.members | w2.members, tree=cotree.node(op, [w1.tree, w2.tree])
    )
    assert out.size == w1.size + w2.size
    return out


def combine_r_partite(
    g: Graph,
    gf: GrowthFunction,
    parts: list[int],
    inner: list[CographWitness],
    color: str,
) -> CographWitness:
    """Union of per-part cographs over parts pairwise pure in one colour."""
    if not parts:
        raise ValueError("no parts")
    if len(inner) != len(parts):
        raise ValueError("need one inner witness per part")
    for i in range(len(parts)):
        if inner[i].members & ~parts[i]:
            raise ValueError(f"inner witness {i} escapes its part")
        for j in range(i + 1, len(parts)):
            if pair_color(g, parts[i], parts[j]) != color:
                raise ValueError(f"parts {i},{j} are not a pure {color} pair")
    if len(parts) == 1:
        return inner[0]
    op = cotree.JOIN if color == RED else cotree.UNION
    members = 0
    for w in inner:
        members |= w.members
    return CographWitness(members=members, tree=cotree.node(op, [w.tree for w in inner]))


def _bucket_index(size: int) -> int:
    # size in (2**(i-1), 2**i] lands in bucket i
    return (size - 1).bit_length()


def combine_bucketed(
    g: Graph,
    gf: GrowthFunction,
    parts: list[int],
    extractor,
) -> tuple[CographWitness, dict]:
    """Combine pairwise-pure parts via dyadic size bucketing.

    Pick the bucket with the largest total size (ties to the lower
    index), extract a cograph among one representative vertex per part
    in it, recurse into the parts whose representatives were selected,
    and substitute each part's cograph for its representative leaf.  The
    recorded (not asserted) floor is the bucketing lower bound; the
    extractor is heuristic so the floor is advisory.
    """
    if not parts:
        raise ValueError("no parts")
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if pair_color(g, parts[i], parts[j]) == MIXED:
                raise ValueError(f"parts {i},{j} are not pure")
    sizes = [p.bit_count() for p in parts]
    buckets: dict[int, list[int]] = {}
    for idx, size in enumerate(sizes):
        buckets.setdefault(_bucket_index(size), []).append(idx)
    chosen = max(sorted(buckets), key=lambda i: sum(sizes[j] for j in buckets[i]))
    picked = buckets[chosen]

    reps = {lowest(parts[j]): j for j in picked}
    rep_sub, rep_labels = induced(g, mask_of(reps))
    rep_w: CographWitness = extractor(rep_sub)
    rep_tree = cotree.relabel(rep_w.tree, {i: rep_labels[i] for i in range(rep_sub.n)})

    substitutions: dict[int, cotree.CotreeNode] = {}
    members = 0
    for rep in cotree.leaves(rep_tree):
        part = parts[reps[rep]]
        part_sub, part_labels = induced(g, part)
        part_w: CographWitness = extractor(part_sub)
        part_tree = cotree.relabel(
            part_w.tree, {i: part_labels[i] for i in range(part_sub.n)}
        )
        substitutions[rep] = part_tree
        members |= cotree.leaf_mask(part_tree)

    tree = cotree.substitute_leaves(rep_tree, substitutions)
    out = CographWitness(members=members, tree=tree)
    assert out.verify(g), "bucketed combination must realize an induced cograph"

    s_total = sum(sizes)
    a_min, b_max = min(sizes), max(sizes)
    log_ratio = math.log2(4.0 * b_max / a_min)
    floor = min(
        gf.f(max(1.0, s_total / (2.0 * a_min * log_ratio))) * gf.f(a_min),
        gf.f(max(1.0, s_total / (2.0 * b_max * log_ratio))) * gf.f(b_max),
    )
    record = {
        "bucket": chosen,
        "bucket_sizes": {i: sum(sizes[j] for j in b) for i, b in buckets.items()},
        "parts_in_bucket": len(picked),
        "recorded_floor": floor,
        "achieved": out.size,
    }
    return out, record


# ---------------------------------------------------------------------------
# The extraction driver


@dataclass
class IterationRecord:
    a: int
    blu: int
    red: int
    err: int


@dataclass
class ExtractTrace:
    n: int
    t: int = 0
    a_sizes: list[int] = field(default_factory=list)
    err_sizes: list[int] = field(default_factory=list)
    fallbacks: list[str] = field(default_factory=list)
    good_pair_is_local_surrogate: bool = True
    purity_checked: bool = False
    purity_ok: bool | None = None
    p5_found: bool = False
    base_case: bool = False
    recognizer_shortcircuit: bool = False
    thresholds: dict = field(default_factory=dict)
    bucket_record: dict | None = None
    # full partition masks, for independent re-verification (not serialized)
    records: list["IterationRecord"] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "a_sizes": self.a_sizes,
            "err_sizes": self.err_sizes,
            "fallbacks": self.fallbacks,
            "good_pair_is_local_surrogate": self.good_pair_is_local_surrogate,
            "purity_checked": self.purity_checked,
            "purity_ok": self.purity_ok,
            "p5_found": self.p5_found,
            "base_case": self.base_case,
            "recognizer_shortcircuit": self.recognizer_shortcircuit,
            "thresholds": self.thresholds,
            "bucket_record": self.bucket_record,
        }


@dataclass
class ExtractResult:
    witness: CographWitness
    p5: P5Witness | None
    trace: ExtractTrace


def analyze_purity_failure(
    g: Graph, rec_i: IterationRecord, rec_j: IterationRecord
) -> P5Witness | PairWitness | None:
    """Explain a mixed pair of extracted cores from iterations i < j.

    Returns an induced P5, or a pure pair to recurse on, or None when
    the desk-scale sizes starve the analysis (recorded, never hidden).
    """
    r_mask = rec_j.a & rec_i.red
    b_mask = rec_j.a & rec_i.blu
    if not r_mask or not b_mask:
        return None
    n_set = rec_j.red & rec_i.blu
    if not n_set:
        return None
    split = one_third_split(g, n_set, BLUE)
    if split.is_pair:
        return split.pair  # red pure pair across the prefix grouping
    n_core = split.big_component
    pool = rec_i.red & rec_j.blu
    consistent_red = 0
    consistent_blue = 0
    for bp in bits(pool):
        st = is_consistent(g, bp, n_core)
        if st == "inconsistent":
            if n_core.bit_count() < 2:
                continue
            u, v2 = mixed_witness(g, bp, n_core, BLUE)
            x = lowest(rec_i.a)
            b_v = lowest(b_mask)
            w = P5Witness((x, bp, u, b_v, v2))
            assert w.verify(g)
            return w
        if st == RED:
            consistent_red |= bit(bp)
        else:
            consistent_blue |= bit(bp)
    major = max(
        (consistent_red, consistent_blue),
        key=lambda s: (s.bit_count(), -lowest(s) if s else 0),
    )
    if major:
        color = RED if major == consistent_red else BLUE
        return PairWitness(left=major, right=n_core, color=color)
    return None


def _whole_graph_witness(g: Graph, tree: cotree.CotreeNode) -> CographWitness:
    return CographWitness(members=g.full_mask, tree=tree)


def extract_cograph(g: Graph, gf: GrowthFunction | None = None) -> ExtractResult:
    """Largest induced cograph this machinery can certify, with trace.

    Always returns a verified witness (at worst a single vertex); if an
    induced P5 turns up along the way it is attached as a side-channel
    diagnostic and the structural iteration stops early.
    """
    if gf is None:
        gf = GrowthFunction()
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))
    trace = ExtractTrace(n=g.n)
    pool: list[CographWitness] = []
    p5_diag: P5Witness | None = None

    def note(x: str) -> None:
        trace.fallbacks.append(x)

    def recurse(mask: int) -> CographWitness:
        nonlocal p5_diag
        assert mask and mask.bit_count() < g.n or g.n == 1
        sub, labels = induced(g, mask)
        res = extract_cograph(sub, gf)
        if res.p5 is not None and p5_diag is None:
            p5_diag = P5Witness(tuple(labels[v] for v in res.p5.vertices))
        mapping = {i: labels[i] for i in range(sub.n)}
        return CographWitness(
            members=mask_of(labels[v] for v in bits(res.witness.members)),
            tree=cotree.relabel(res.witness.tree, mapping),
        )

    def extractor(sub: Graph) -> CographWitness:
        return extract_cograph(sub, gf).witness

    # Recognizer short-circuit: a cograph is its own best answer.
    rec = cograph_recognize(g)
    if not isinstance(rec, P4Witness):
        trace.recognizer_shortcircuit = True
        return ExtractResult(_whole_graph_witness(g, rec), None, trace)

    base_cap = limits()["cograph"]
    if g.n <= base_cap:
        trace.base_case = True
        return ExtractResult(largest_cograph_exact(g), None, trace)

    pool.append(hom_to_cograph(hom_greedy(g)))

    n = g.n
    trace.thresholds = {
        "f_n": gf.f(n),
        "eps_n": gf.eps(n),
        "iteration_floor": gf.iteration_floor(n),
        "medium_floor": gf.medium_floor(n),
        "large_floor": gf.large_floor(n),
    }

    work = g.full_mask
    records: list[IterationRecord] = []
    while p5_diag is None and at_least(work.bit_count(), gf.iteration_floor(n)):
        gp = find_good_pair(g, work)
        if gp is None:
            # the working set is a clique: pool it whole
            members = work
            if members.bit_count() == 1:
                pool.append(CographWitness(members=members, tree=lowest(members)))
            else:
                pool.append(
                    CographWitness(
                        members=members,
                        tree=cotree.node(cotree.JOIN, list(bits(members))),
                    )
                )
            note("work-clique")
            break
        outcome: MainClaimOutcome | None = None
        # Every BetterPair strictly increases (|a|, |b|) lexicographically,
        # so the retry chain is finite; n*n is a generous hard stop.
        for _ in range(g.n * g.n + 1):
            outcome = build_main_claim(g, work, gp, gf, n_top=n)
            if isinstance(outcome, BetterPair):
                gp = _grow_to_fixpoint(g, work, outcome.pair.a, outcome.pair.b)
                assert gp.verify(g, work)
                continue
            break
        assert not isinstance(outcome, BetterPair), "pair improvement must terminate"

        if isinstance(outcome, P5Found):
            p5_diag = outcome.witness
            trace.p5_found = True
            note("p5")
            break
        if isinstance(outcome, PurePairFound):
            pw = outcome.pair
            note(f"purepair:{pw.color}")
            w1 = recurse(pw.left)
            w2 = recurse(pw.right)
            pool.append(combine_pure(g, gf, w1, w2, pw.color))
            break
        if isinstance(outcome, RPartiteFound):
            note(f"rpartite:{outcome.color}:{len(outcome.parts)}")
            inner = [recurse(p) for p in outcome.parts]
            pool.append(combine_r_partite(g, gf, list(outcome.parts), inner, outcome.color))
            break
        assert isinstance(outcome, MainClaimPartition)
        records.append(
            IterationRecord(a=outcome.a, blu=outcome.blu, red=outcome.red, err=outcome.err)
        )
        trace.a_sizes.append(outcome.a.bit_count())
        trace.err_sizes.append(outcome.err.bit_count())
        work &= ~(outcome.a | outcome.err)

    trace.t = len(records)
    trace.records = list(records)

    if len(records) >= 1:
        cores = [r.a for r in records]
        pure = True
        if len(records) >= 2:
            trace.purity_checked = True
            for i in range(len(cores)):
                for j in range(i + 1, len(cores)):
                    if pair_color(g, cores[i], cores[j]) != MIXED:
                        continue
                    pure = False
                    res = analyze_purity_failure(g, records[i], records[j])
                    if isinstance(res, P5Witness):
                        if p5_diag is None:
                            p5_diag = res
                        trace.p5_found = True
                        note("purity:p5")
                    elif isinstance(res, PairWitness):
                        note(f"purity:purepair:{res.color}")
                        w1 = recurse(res.left)
                        w2 = recurse(res.right)
                        pool.append(combine_pure(g, gf, w1, w2, res.color))
                    else:
                        note("purity:inconclusive")
            trace.purity_ok = pure
        if pure:
            combined, rec_info = combine_bucketed(g, gf, cores, extractor)
            trace.bucket_record = rec_info
            pool.append(combined)

    if 0 < work.bit_count() < g.n:
        pool.append(recurse(work))

    best = min(pool, key=lambda w: (-w.size, tuple(bits(w.members))))
    assert best.verify(g), "every returned witness must re-verify"
    return ExtractResult(witness=best, p5=p5_diag, trace=trace)
