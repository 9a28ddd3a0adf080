"""thetagraph: exact deciders, forbidden-subgraph checks, multigraph
unfoldments and named graph families around spanning Θ-subgraphs."""

from .enumeration import (MinimalityVerdict, canonical_form, enumerate_graphs, enumerate_multigraphs,
                          graph_classes, graph_levels, graphs_from_graph6, minimality_scan)
from .families import (G_FACTS, G_MIN_K, Bipath, HFamilySpec, LabeledGraph, TriangleChain, chain_type,
                       g_fact_violations, gen_brousek, gen_catalog, gen_chain, gen_G, gen_H, gen_link,
                       parse_chain)
from .forbidden import (ForbiddenSpec, find_induced, has_claw, is_free, longest_induced_path, make_forbidden,
                        parse_forbidden, verify_embedding)
from .graph import (GraphError, Link, Metrics, SimpleGraph, build_graph, complete_bipartite, complete_graph,
                    components, cycle_graph, from_edge_list, from_graph6, independence_number, induced_subgraph,
                    is_biconnected, is_complete, is_connected, is_cycle, is_locally_connected, list_two_cuts,
                    max_clique, parse_graph, path_graph, petersen_graph, star_graph, structural_metrics,
                    to_edge_list, to_graph6, vertex_connectivity)
from .hamilton import (LinkClassification, ThetaCertificate, classify_link, hamilton_cycle, hamilton_path_between,
                       has_spanning_theta, is_pure_link, spanning_theta, verify_hamilton_cycle,
                       verify_hamilton_path, verify_theta)
from .harness import TASKS, VerificationReport, load_config, run_verification
from .multigraph import (MultiGraph, MultiGraphError, SemiLooplessMultiGraph, build_multigraph, edge_connectivity,
                         find_euler_trail, is_k_edge_connected, multigraph_isomorphic, parse_multigraph,
                         replay_trail)
from .unfold import (TRIANGLE, ColoredGraph, ColoredLink, ConditionReport, PureLinkSpec, SemiFold,
                     UnfoldmentTrace, associated_pairs, check_semi_unfoldment, check_unfoldment, delete_link, fold,
                     fold_semi, parse_colored, path_link, unfold, unfold_semi)

__version__ = "0.1.0"
