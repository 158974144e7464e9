"""Exact covers of subgraph-copy footprints under automorphism symmetry.

The package computes, for a pattern graph K and a finite host graph, the
minimum number of vertices meeting every copy of K and the minimum size of
such a set that is additionally invariant under every automorphism of the
host, together with executable verifiers for the exact inequalities and
boundary conditions that relate the two.
"""
from .checks import (BoundaryReport, NeighborhoodProfile,
                     OrbitContainmentReport, OrbitDensityReport,
                     OrbitExpansionReport, OrbitSumReport, WeightFunction,
                     WeightSystemReport, build_pair_weight,
                     check_extremal_boundary, check_orbit_density,
                     check_orbit_pattern_containment, neighborhood_profile,
                     verify_orbit_expansion, verify_orbit_sum_bound,
                     verify_weighted_system, weight_orbit,
                     weighted_symmetrize)
from .copies import (FOOTPRINT_CAP, CopyFamily, contains_copy,
                     enumerate_footprints, footprints_of)
from .covers import (NODE_BUDGET, CoverSolution, ExtremalityReport,
                     extremality_report, min_hitting_set,
                     symmetric_vertex_representativity,
                     vertex_representativity)
from .errors import (FamilySpecError, GraphParseError, NotAHittingSetError,
                     PreconditionError, ResourceLimitError, SymcoverError,
                     WeightConstructionError)
from .graphs import (FamilySpec, Graph, basic_predicates, canonical_form,
                     canonical_graph, disjoint_union, emit_graph6, generate,
                     has_pendant_vertex, induced_subgraph, is_connected,
                     is_isomorphic, is_regular, parse_edge_list,
                     parse_family_spec, parse_graph6)
from .report import parse_rat, rat, render_human
from .search import (SearchReport, classify_vt_extremal, enum_graphs,
                     find_dense_counterexample, scan_connected_extremal)
from .symmetry import (AutomorphismGroup, OrbitPartition, automorphisms,
                       is_vertex_transitive, orbits, refine_colors)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BoundaryReport",
    "NeighborhoodProfile",
    "OrbitContainmentReport",
    "OrbitDensityReport",
    "OrbitExpansionReport",
    "OrbitSumReport",
    "WeightFunction",
    "WeightSystemReport",
    "build_pair_weight",
    "check_extremal_boundary",
    "check_orbit_density",
    "check_orbit_pattern_containment",
    "neighborhood_profile",
    "verify_orbit_expansion",
    "verify_orbit_sum_bound",
    "verify_weighted_system",
    "weight_orbit",
    "weighted_symmetrize",
    "FOOTPRINT_CAP",
    "CopyFamily",
    "contains_copy",
    "enumerate_footprints",
    "footprints_of",
    "NODE_BUDGET",
    "CoverSolution",
    "ExtremalityReport",
    "extremality_report",
    "min_hitting_set",
    "symmetric_vertex_representativity",
    "vertex_representativity",
    "FamilySpecError",
    "GraphParseError",
    "NotAHittingSetError",
    "PreconditionError",
    "ResourceLimitError",
    "SymcoverError",
    "WeightConstructionError",
    "FamilySpec",
    "Graph",
    "basic_predicates",
    "canonical_form",
    "canonical_graph",
    "disjoint_union",
    "emit_graph6",
    "generate",
    "has_pendant_vertex",
    "induced_subgraph",
    "is_connected",
    "is_isomorphic",
    "is_regular",
    "parse_edge_list",
    "parse_family_spec",
    "parse_graph6",
    "parse_rat",
    "rat",
    "render_human",
    "SearchReport",
    "classify_vt_extremal",
    "enum_graphs",
    "find_dense_counterexample",
    "scan_connected_extremal",
    "AutomorphismGroup",
    "OrbitPartition",
    "automorphisms",
    "is_vertex_transitive",
    "orbits",
    "refine_colors",
]
