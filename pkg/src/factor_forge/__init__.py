"""Degree-constrained (r, r+a)-factorizations of simple graphs."""
from .colouring import (EdgeColouring, equitable_colour_bipartite, equitable_colour_simple,
                        imbalance)
from .errors import FactorForgeError
from .extremal import (BoundaryInstance, counting_certificate, gen_boundary_EO, gen_boundary_OO,
                       gen_lemma14_regular, gen_lemma14_topend)
from .factorizer import (Factorization, augment_pendants, factorize, factorize_exact,
                         factorize_interior, verify_factorization)
from .graph import SimpleGraph, degree_profile, load_graph, read_graph, save_graph, write_graph
from .oracle import conformance_sweep, exists_factorization, sample_dds_graphs
from .thresholds import (ThresholdParams, beta, big_n, crosscheck, feasible_x_set, mu_bounds, pi,
                         sigma, sigma_bounds, sigma_by_search)

__version__ = "0.1.0"
