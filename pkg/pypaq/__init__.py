"""
Pattern avoidance and quasisymmetric functions

Computes Q_n(Pi), the sum of F_{Des sigma} over the permutations of [n]
avoiding every pattern in Pi, decides whether it is symmetric and Schur
nonnegative, and checks the structural results about such sets at small n.
"""
from .common import (ResourceLimitError, WitnessError, config,
                     set_default_config, get_config,
                     set_threads)
from .permutations import (permutation, patternSet, maskedWord, INF, iota,
                           delta, standardize, contains, avoiders,
                           descent_set, ides, lis_lds, mask, k_endpoints,
                           rt_decomposition, shuffle_set, partial_shuffle)
from .tableaux import (tableau, partitions, f_lambda, syt_enumerate, rs,
                       rs_inverse, des_tableau, knuth_class, knuth_class_shape,
                       superstandard, is_superstandard_hook, av_tableaux)
from .qsym import (qsymF, qsymM, schurVector, notSymmetric, f_to_m, m_to_f,
                   is_symmetric, schur_to_f, schur_expand, is_schur_nonneg)
from .avoidance import (qn, iode_rhs, ps_rhs, pkc_shape_rhs,
                        hook_expansion_rhs, pi_partial, pi_general, pi_zero,
                        shape_patterns)
from .bijections import phi, psi, phi_inverse, psi_inverse
from .closure import (verificationReport, closureResult, d_j_inverse,
                      is_swap_closed, is_i_descent_consistent,
                      is_pattern_knuth_closed, descent_complete_pairs,
                      classify_knuth_union, stability_check,
                      survey_symmetric_sets)
from .verify import CLAIMS, run_claim

__version__ = '1.0.0'
