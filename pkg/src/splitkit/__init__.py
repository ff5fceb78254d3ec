"""Split-graph classification, edge contraction, and theorem verification."""

from .errors import (
    EmptySet,
    InvalidPartition,
    IsStar,
    LoopEdge,
    MalformedCorpus,
    MalformedGraph6,
    NoInduced2K2,
    NoInducedC4,
    NotAnEdge,
    NotPseudoSplit,
    NotSplit,
    OrderOutOfRange,
    OrderTooLargeForColoring,
    OrderTooLargeForIsomorphism,
    OrderTooLargeForPerfection,
    SplitkitError,
    UnclassifiablePartition,
    UnsupportedOrder,
    VertexOutOfRange,
)
from .graphs import (
    Edge,
    Graph,
    NamedPattern,
    PATTERN_TAGS,
    build,
    canonical_code,
    canonical_form,
    complement,
    complete_bipartite_graph,
    complete_graph,
    contract,
    cycle_graph,
    disjoint_union,
    enumerate_all,
    enumerate_connected,
    induced,
    is_isomorphic,
    parse_edge_list,
    parse_graph6,
    parse_graph6_lines,
    path_graph,
    relabel,
    star_graph,
    write_graph6,
)
from .invariants import (
    PatternWitness,
    chromatic_number,
    clique_number,
    contains_2k2,
    contains_c4,
    contains_c5,
    dominates,
    find_induced,
    has_induced,
    independence_number,
    is_perfect,
    max_clique,
)
from .recognition import (
    CASE_I,
    CASE_II,
    CASE_III,
    ClassificationReport,
    FamilyTag,
    KSPartition,
    PseudoSplitDecomposition,
    classify,
    classify_ks_case,
    detect_exceptional,
    find_2k2_witness,
    find_c4_witness,
    find_nonsplit_witness,
    find_unbalanced_witness,
    is_balanced_split,
    is_ng_by_characterisation,
    is_ng_by_definition,
    is_pseudo_split,
    is_split,
    is_split_degrees,
    is_split_forbidden,
    is_star,
    ks_partition,
    pseudo_split_decompose,
)
from .harness import (
    CensusRow,
    THEOREM_IDS,
    TheoremReport,
    census,
    check_one,
    verify,
    verify_all,
)

__version__ = "0.1.0"
