"""Bipartite-hole machinery for Hamiltonicity.

The package decides Hamiltonicity through the bipartite-hole number
``alpha_tilde``: for any graph with minimum degree ``delta >= alpha_tilde``
a Hamilton cycle exists, and :func:`find_hamilton` constructs either such a
cycle or a machine-checkable certificate that ``alpha_tilde > delta`` in
polynomial time.  Exact (exponential) oracles, edge-disjoint cycle
extraction, a hardness reduction from balanced complete bipartite
subgraphs, and a seeded random-graph laboratory round out the toolkit.
"""

from hamholes._kernels import BACKEND
from hamholes.disjoint import DisjointResult, find_edge_disjoint_hamilton
from hamholes.errors import (
    BudgetExceededError,
    CertificateError,
    ContractViolationError,
    GraphFormatError,
    HamholesError,
)
from hamholes.graph import (
    Graph,
    bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    external_neighborhood,
    fan_example_graph,
    generate,
    gnp_graph,
    min_degree,
    parse_graph,
    path_graph,
    petersen_graph,
    serialize_graph,
)
from hamholes.hamilton import (
    CycleSeq,
    HamResult,
    PathState,
    disconnected_certificate,
    extend_maximal,
    extract_certificate,
    find_hamilton,
    parse_cycle,
    reopen_cycle,
    serialize_cycle,
    try_close,
)
from hamholes.hardness import (
    BipartiteInstance,
    bcbs_to_bhn,
    check_reduction_equivalence,
    parse_instance,
    serialize_instance,
)
from hamholes.holes import (
    ALPHA_SIZE_GUARD,
    BipartiteHole,
    HoleCertificate,
    alpha_tilde_exact,
    has_bipartite_hole,
    parse_certificate,
    serialize_certificate,
    translate_certificate,
    verify_certificate,
)
from hamholes.oracle import (
    DEFAULT_BUDGET,
    WorkBudget,
    exists_edge_disjoint_hc_exact,
    independence_number_exact,
    is_hamiltonian_exact,
    vertex_connectivity_exact,
)
from hamholes.randomlab import (
    ExperimentConfig,
    ExperimentReport,
    SampleRecord,
    check_P1,
    check_P2,
    lemma6_params,
    m_value,
    run_experiment,
    sample_seed,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_SIZE_GUARD",
    "BACKEND",
    "BipartiteHole",
    "BipartiteInstance",
    "BudgetExceededError",
    "CertificateError",
    "ContractViolationError",
    "CycleSeq",
    "DEFAULT_BUDGET",
    "DisjointResult",
    "ExperimentConfig",
    "ExperimentReport",
    "Graph",
    "GraphFormatError",
    "HamResult",
    "HamholesError",
    "HoleCertificate",
    "PathState",
    "SampleRecord",
    "WorkBudget",
    "alpha_tilde_exact",
    "bcbs_to_bhn",
    "bipartite_graph",
    "check_P1",
    "check_P2",
    "check_reduction_equivalence",
    "complete_graph",
    "components",
    "cycle_graph",
    "disconnected_certificate",
    "disjoint_union",
    "exists_edge_disjoint_hc_exact",
    "extend_maximal",
    "external_neighborhood",
    "extract_certificate",
    "fan_example_graph",
    "find_edge_disjoint_hamilton",
    "find_hamilton",
    "generate",
    "gnp_graph",
    "has_bipartite_hole",
    "independence_number_exact",
    "is_hamiltonian_exact",
    "lemma6_params",
    "m_value",
    "min_degree",
    "parse_certificate",
    "parse_cycle",
    "parse_graph",
    "parse_instance",
    "path_graph",
    "petersen_graph",
    "reopen_cycle",
    "run_experiment",
    "sample_seed",
    "serialize_certificate",
    "serialize_cycle",
    "serialize_graph",
    "serialize_instance",
    "translate_certificate",
    "try_close",
    "verify_certificate",
    "vertex_connectivity_exact",
]
