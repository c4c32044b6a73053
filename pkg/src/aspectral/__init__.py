"""Spectral toolkit for the degree-weighted adjacency family
alpha*D + (1-alpha)*A: exact spectra, closed-form bounds, extremal graph
families, class enumeration, and exhaustive verification sweeps."""

from .bounds import (
    BoundComparisons,
    BoundEvaluation,
    CubicH,
    best_rowsum_bound,
    bound_comparisons,
    cubic_h,
    delta_bound,
    domination_bound,
    energy_bounds,
    estrada_upper,
    evaluate_all,
    gamma_star_bound,
    irregular_diameter_bound,
    kconnected_bound,
    least_eigenvalue_gap,
    match_domination_family,
    rho_star_plus_edge,
    rowsum_bound,
    shi_type_bound,
    star_radius,
)
from .canon import CANONICAL_CAP, canonical_form, is_isomorphic
from .enumeration import (
    CLASSES,
    EnumerationQuery,
    all_graphs,
    chunked,
    connected_graphs,
    connected_nonbipartite,
    enumerate_graphs,
    enumerate_labeled,
    trees,
    unicyclic,
)
from .errors import CapabilityError, ConvergenceError, Graph6Error, GraphError
from .families import (
    PendantSpec,
    attach_pendant_path,
    complete,
    cycle,
    diameter_tree,
    domination_extremal,
    double_star,
    family_from_spec,
    move_neighbors,
    path,
    pendant_pair,
    star,
    star_plus_edge,
    two_edge_swap,
)
from .graph6 import graph6_decode, graph6_encode
from .graphs import (
    Graph,
    StructuralProfile,
    build_graph,
    complement,
    components,
    diameter,
    domination_number,
    graph_from_json,
    graph_to_json,
    is_bipartite,
    is_connected,
    is_k_connected,
    structural_profile,
    vertex_connectivity,
)
from .spectral import (
    IndexValues,
    SpectralSummary,
    a_alpha_matrix,
    alpha_energy,
    alpha_estrada,
    alpha_spectral_radius,
    default_alpha_grid,
    eigenvalues,
    gamma_alpha,
    indices,
    laplacian_largest,
    perron_vector,
    spectrum,
    trace_identities,
    zagreb_index,
)
from .verify import (
    ALL_BOUND_CHECKS,
    DEAD_BAND,
    MARGIN,
    TheoremReport,
    merge_reports,
    named_small_bases,
    random_connected_corpus,
    round12,
    round_floats,
    verify_delta_and_irregular_bounds,
    verify_domination,
    verify_gamma_extremes,
    verify_pendant_monotonicity,
    verify_rewiring_lemmas,
    verify_tree_extremes,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
