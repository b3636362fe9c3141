"""hamforbid: exact small-graph invariants, Hamiltonicity, and cycle surgery."""

from .errors import (
    AssemblyError,
    ContextError,
    Graph6Error,
    HamforbidError,
    HypothesisError,
    InternalConsistencyError,
    PreconditionError,
    ResourceLimitError,
)
from .graphs import (
    Graph,
    bit,
    bits,
    complete_bipartite,
    complete_graph,
    component_count,
    component_masks,
    cycle_graph,
    distance,
    encode_graph6,
    is_connected,
    is_independent,
    mask_of,
    parse_graph6,
    path_graph,
    petersen_graph,
    star_graph,
)
from .hamilton import (
    OrientedCycle,
    are_isomorphic,
    hamiltonian_cycle,
    hamiltonian_dp,
    is_hamiltonian,
    is_petersen,
    longest_cycle,
)
from .invariants import (
    INF,
    EssentialSet,
    InvariantReport,
    alpha_e,
    connectivity,
    essential_sets,
    independent_union_oracle,
    invariant_report,
    is_k_connected,
    is_p2kp1_free,
    is_t_tough,
    mu,
    neighbor_count_oracle,
    toughness,
    toughness_witness,
)
from .surgery import (
    CycleExchange,
    GoodPath,
    LongerCycle,
    PathFacts,
    ReplayOutcome,
    StructureCertificate,
    SurgeryContext,
    bad_interval,
    build_context,
    exchange_cycle,
    exterior_structure,
    good_path_double,
    good_path_single,
    good_path_triple,
    interval_bad_edges,
    interval_parity_agrees,
    path_extension,
    petersen_assembly,
    replay,
)
from .verifier import (
    ExhaustiveCorpus,
    FilterResult,
    Hypothesis,
    LemmaReport,
    Verdict,
    VerifyReport,
    filter_graph,
    generate_labeled_graphs,
    graph_from_edge_mask,
    hypothesis,
    ingest_corpus,
    judge,
    labeled_graph_count,
    lemma_suite,
    verify,
)

__version__ = "0.1.0"
