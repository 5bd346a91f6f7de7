"""Distance chromatic numbers of graphs: exact solvers, degree and spectral
upper bounds, Moore-graph equality detection, and corpus scans."""

__version__ = "0.1.0"

from .graphs import (
    EdgeListError,
    GenerationError,
    Graph,
    Graph6Error,
    GraphClass,
    class_from_spec,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    encode_graph6,
    from_edges,
    generate,
    graph_from_spec,
    hex_lattice,
    hoffman_singleton,
    lcf_graph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    petersen,
    random_regular,
    read_graph6_lines,
    square_lattice_torus,
    star_graph,
    tutte_coxeter,
    validate,
)
from .metrics import (
    INFINITE,
    CliqueCapError,
    InvariantReport,
    PowerGraph,
    bfs_distances,
    clique_number,
    diameter,
    girth,
    invariants,
    is_bipartite,
    is_connected,
    max_clique,
    max_power_degree,
    power_graph,
    shortest_cycle,
    two_degree_profile,
    vertex_connectivity,
)
from .coloring import (
    Coloring,
    CompletionFailure,
    PartialColoring,
    SolverBudgetError,
    SolverCapError,
    StrategyOutcome,
    chromatic_number,
    complete_partial_coloring,
    cycle_distance_chromatic,
    distance_chromatic_number,
    dsatur_upper_bound,
    greedy_coloring,
    normalize_coloring,
    order_by_distance_from_edge,
    path_distance_chromatic,
    save_color_strategy,
)
from .spectral import (
    MatrixInequalityReport,
    SpectralBoundReport,
    SpectralConvergenceError,
    SpectralResult,
    adjacency_matrix,
    degree_matrix,
    geometric_series_bound,
    laplacian,
    power_matrix_inequalities,
    spectral_power_bounds,
    spectral_radius,
)
from .bounds import (
    BoundEntry,
    BoundReport,
    CliqueExclusionReport,
    MooreCertificate,
    OddCaseOutcome,
    ScanReport,
    SoundnessViolation,
    check_clique_exclusion,
    conjecture_scan,
    detect_moore,
    enumerate_odd_degree_cases,
    evaluate_bounds,
    odd_degree_threshold,
    resolve_odd_degree_case,
)
