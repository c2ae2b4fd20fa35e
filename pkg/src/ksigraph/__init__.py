"""Graph analytics around ksi centrality.

Core objects: immutable :class:`Graph`, centrality computations with
three mutually verifying paths, Laplacian/Cheeger bound checks, seeded
graph generators, closed-form family oracles, Erdos-Renyi expectations,
and distribution reports.  The ``ksigraph`` console script exposes the
same functionality for batch work.
"""

from .analytic import (
    ANALYTIC_FAMILIES,
    ErExpectation,
    ErMonteCarloReport,
    FamilyCentrality,
    FamilyParams,
    MonteCarloQuantity,
    SparseErAsymptotics,
    VertexClass,
    analytic_centrality,
    build_family,
    build_nested_triangles,
    build_star,
    build_wheel,
    build_windmill,
    er_expected,
    er_sparse_asymptotics,
    monte_carlo_er,
    per_node_values,
)
from .centrality import (
    DEFAULT_MATRIX_CAP,
    CentralityVector,
    average_clustering,
    average_ksi,
    average_ksi_normalized,
    boundary_counts,
    boundary_counts_via_adjacency,
    boundary_counts_via_laplacian,
    boundary_edge_count,
    clustering_vector,
    ksi,
    ksi_normalized,
    ksi_normalized_vector,
    ksi_normalized_via_laplacian,
    ksi_vector,
    ksi_via_adjacency_matrix,
    laplacian_cubic_diagonal,
    local_clustering,
)
from .generators import (
    FAMILIES,
    GenSpec,
    gen_barabasi_albert,
    gen_bhl,
    gen_erdos_renyi,
    gen_havel_hakimi,
    gen_ring_lattice,
    gen_watts_strogatz,
    generate,
)
from .graph import (
    CapacityError,
    EdgeListParseError,
    Graph,
    ParsedEdgeList,
    build_graph,
    connected_components,
    parse_edge_list,
    serialize_edge_list,
)
from .spectral import (
    CHEEGER_CAP,
    DENSE_EIG_CUTOFF,
    CheegerBoundReport,
    CheegerResult,
    ConnectivityBoundReport,
    SpectralSummary,
    algebraic_connectivity,
    cheeger_exact,
    laplacian_dense,
    verify_cheeger_bounds,
    verify_lambda2_bound,
)
from .stats import (
    SHAPE_THRESHOLDS,
    DistributionSummary,
    NetworkReport,
    ba_size_invariance,
    network_report,
    ratio_series_ws,
    shape_classify,
    summarize,
)

__version__ = "0.1.0"
