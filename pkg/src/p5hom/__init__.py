"""Homogeneous sets and cographs in P5-free graphs, with certificates.

The package splits into: bitset graph core (graph), pattern detectors
and F4 counting (detect), exact small-n oracles (oracle), the
anticomplete-pair pipeline (pairfinder), the growth function (growth),
the cograph extractor (extract), corpus generators (generators), file
formats (io), and the CLI (cli).  Every search result is a witness
object that re-verifies against the graph using only core predicates.
"""

from .cotree import CotreeNode, realize
from .detect import (
    EdgeNeighborhoodPartition,
    cograph_recognize,
    count_f4_on_edge,
    count_f4_total,
    edge_neighborhoods,
    find_induced_f4,
    find_induced_p4,
    find_induced_p5,
    has_induced_p5,
    is_cograph,
)
from .extract import (
    ExtractResult,
    GoodPair,
    MainClaimPartition,
    build_main_claim,
    combine_bucketed,
    combine_pure,
    combine_r_partite,
    extract_cograph,
    find_good_pair,
)
from .graph import (
    BLUE,
    RED,
    Graph,
    PairWitness,
    components,
    induced,
    is_consistent,
    mixed_witness,
    one_third_split,
    pair_color,
)
from .growth import GrowthFunction
from .oracle import es_floor, hom_exact, hom_greedy, hom_subsets, largest_cograph_exact
from .pairfinder import (
    PairOutcome,
    PipelineDiagnostic,
    best_f4_edge,
    check_component_consistency,
    find_anticomplete_pair,
    hom_from_f4_free,
)
from .witness import (
    CographWitness,
    F4Witness,
    HomWitness,
    P4Witness,
    P5Witness,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "RED",
    "CographWitness",
    "CotreeNode",
    "EdgeNeighborhoodPartition",
    "ExtractResult",
    "F4Witness",
    "GoodPair",
    "Graph",
    "GrowthFunction",
    "HomWitness",
    "MainClaimPartition",
    "P4Witness",
    "P5Witness",
    "PairOutcome",
    "PairWitness",
    "PipelineDiagnostic",
    "best_f4_edge",
    "build_main_claim",
    "check_component_consistency",
    "cograph_recognize",
    "combine_bucketed",
    "combine_pure",
    "combine_r_partite",
    "components",
    "count_f4_on_edge",
    "count_f4_total",
    "edge_neighborhoods",
    "es_floor",
    "extract_cograph",
    "find_anticomplete_pair",
    "find_good_pair",
    "find_induced_f4",
    "find_induced_p4",
    "find_induced_p5",
    "has_induced_p5",
    "hom_exact",
    "hom_from_f4_free",
    "hom_greedy",
    "hom_subsets",
    "induced",
    "is_cograph",
    "is_consistent",
    "largest_cograph_exact",
    "mixed_witness",
    "one_third_split",
    "pair_color",
    "realize",
    "verify",
]
