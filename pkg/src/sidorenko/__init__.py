"""Exact homomorphism counting and Sidorenko-exponent tools for uniform
hypergraphs."""
from .hypergraph import (
    Hypergraph,
    PartiteHypergraph,
    LinkProfile,
    boundary_degree,
    common_neighborhood,
    components,
    degree_stats,
    downward_hypergraph,
    is_isomorphic,
    is_subhypergraph,
    link_hypergraph,
    link_profile,
    remove_vertices,
)
from .hom import (
    BudgetExceeded,
    Density,
    Homomorphism,
    classify,
    count_homomorphisms,
    density,
    factor_count,
    restrict,
    tensor_density_identity,
)
from .constructions import (
    build,
    catalog,
    complete,
    complete_partite,
    cycle,
    lift,
    loose_triangle,
    path,
    tensor_power,
    tensor_product,
    tight_cycle,
)
from .exponent import ExponentWitness, exponent_lower_search, exponent_ratio, sidorenko_check
from .bounds import BoundCertificate, bound_grid_links, bound_sparse, bound_tight_cycle, bound_unified, hom_ratio_check, lift_bound
from .domination import WeightedKernel, csg_check, domination_check, kernel_density, weakly_norming_suite
from .trace import ProofTrace, proof_trace
from .extremal import bipartite_links_bound, deletion_lower, ex_small, find_lift_copy, kst_threshold

__version__ = "0.1.0"

__all__ = [
    "Hypergraph",
    "PartiteHypergraph",
    "LinkProfile",
    "boundary_degree",
    "common_neighborhood",
    "components",
    "degree_stats",
    "downward_hypergraph",
    "is_isomorphic",
    "is_subhypergraph",
    "link_hypergraph",
    "link_profile",
    "remove_vertices",
    "BudgetExceeded",
    "Density",
    "Homomorphism",
    "classify",
    "count_homomorphisms",
    "density",
    "factor_count",
    "restrict",
    "tensor_density_identity",
    "build",
    "catalog",
    "complete",
    "complete_partite",
    "cycle",
    "lift",
    "loose_triangle",
    "path",
    "tensor_power",
    "tensor_product",
    "tight_cycle",
    "ExponentWitness",
    "exponent_lower_search",
    "exponent_ratio",
    "sidorenko_check",
    "BoundCertificate",
    "bound_grid_links",
    "bound_sparse",
    "bound_tight_cycle",
    "bound_unified",
    "hom_ratio_check",
    "lift_bound",
    "WeightedKernel",
    "csg_check",
    "domination_check",
    "kernel_density",
    "weakly_norming_suite",
    "ProofTrace",
    "proof_trace",
    "bipartite_links_bound",
    "deletion_lower",
    "ex_small",
    "find_lift_copy",
    "kst_threshold",
]
