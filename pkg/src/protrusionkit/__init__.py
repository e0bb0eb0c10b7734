"""Protrusion decompositions over treewidth modulators, an explicit Edge
Dominating Set kernel, and an exact Planar-F-Deletion solver at desk scale."""

from .boundaried import BoundariedGraph, glue, unglue
from .graphs import (Graph, PathFamily, complete_graph, constrict, contract_edge,
                     count_cliques, cycle_graph, disjoint_union, is_isomorphic,
                     path_graph, star_graph, theta_graph)
from .minors import is_family_minor_free, is_minor, is_topological_minor
from .protrusion import (MarkingTrace, ProtrusionDecomposition,
                         build_protrusion_decomposition, clusters,
                         find_max_protrusion, mark_bags, shrink_protrusion,
                         validate_protrusion_decomposition)
from .treewidth import (NiceTreeDecomposition, TreeDecomposition,
                        exact_treewidth, heuristic_decomposition, make_nice,
                        rooted_component_decompositions, validate_decomposition)
from .bounds import (CONSTANTS, SparsityConstants, cluster_count_bound,
                     eds_kernel_bound, kernel_size_bound, marked_bags_bound,
                     minor_clique_bound, minor_edge_bound, topo_clique_bound,
                     topo_edge_bound)
from .eds import (EdsInstance, eds_2approx, eds_brute_force, eds_kernelize,
                  eds_modulator, twin_eliminate)
from .fdeletion import (ClusterRepresentatives, DisjointInstance, Family,
                        boundaried_test_graphs, compute_representatives,
                        disjoint_solver, f_deletion_brute_force,
                        planar_f_deletion, solve_with_decomposition,
                        treewidth_bound_for_family)

__all__ = [name for name in dir() if not name.startswith("_")]
