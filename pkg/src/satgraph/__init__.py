"""satgraph: exact computation of generalized graph saturation numbers.

Constructions, counters, saturation certificates, closed-form
optimizers and bounds, and an exhaustive small-graph search oracle for
quantities of the form sat_H(n, F): the minimum number of copies of H
among F-saturated graphs on n vertices.
"""

__version__ = "0.1.0"

from .graph import (Graph, build_graph, blow_up, combine, complement,
                    complete_graph, cycle_graph, decode_graph6,
                    disjoint_union, empty_graph, encode_graph6, join,
                    path_graph, star_graph)
from .canon import (are_isomorphic, canonical_form, canonical_graph,
                    canonical_labeling)
from .patterns import (PatternSpec, clique, cycle, graph_pattern,
                       parse_pattern, path, star, tree_pattern)
from .counting import (count_cliques, count_cycles, count_independent_sets,
                       count_paths, count_pattern, count_stars, count_tree,
                       independence_number, tree_automorphisms)
from .saturation import (SaturationCertificate, contains_copy, creates_copy,
                         is_family_saturated, is_saturated, peel_universal,
                         star_sat_structure)
from .constructions import (cycle_pendants, fig1, fig2, g49, g4n, gtn,
                            kr_graph, near_regular, partite_saturated,
                            regular_multipartite, split_graph, t_star, w_t)
from .staropt import (StarStarInstance, delta, gen_binom, m0, m0_estimate,
                      m0_lower_bounds, r2_xbar, satnum_star_star,
                      sr_kr_formula, star_star_instance, tie_square_scan,
                      tie_ts, xbar)
from .bounds import (best_c, cl_value, ehm_value, krfree_bound,
                     krfree_bound_at_r, kt_threshold, partite_necessary,
                     partite_threshold, partite_threshold_smooth,
                     path_sat_threshold, smooth_minimizer_c,
                     split_path_leading)
from .search import (SearchConstraints, SearchReport, enumerate_graphs,
                     exists_saturated_with, satnum_exact, tstar_scan)
