"""Weight hierarchies of q-ary Reed-Muller codes and ramp secret sharing.

The package computes generalized and relative generalized Hamming weights
of q-ary Reed-Muller codes through exact window combinatorics, evaluates
the matching closed forms for two variables, derives the leakage profile
of the coset-construction ramp secret-sharing scheme built on a nested
code pair, and simulates the two random-line local-correction decoders.
Brute-force oracles certify every formula at desk scale.
"""

from .closedform import case_of, codim2, ghw2, ghw2_dim, rghw2, rghw_minus_ghw_special
from .correct import local_correct_a, local_correct_b, simulate_correction
from .gf import (Field, FieldElement, conway_polynomial, enumerate_elements,
                 field_from_order, field_new)
from .monomials import (ClippedWindow, Window, cmp_antilex, cmp_lex, degree,
                        lower_shadow, lower_shadow_size, mu, upward_shadow,
                        upward_shadow_size, window_members)
from .oracle import (brute_min_shadow, brute_min_support, brute_profile,
                     extremal_subspace, leakage_dim)
from .scheme import (LeakageProfile, PartialInfo, ShareVector, encode, leakage,
                     profile, read_shares, reconstruct, write_shares)
from .weights import (CodePair, dual_order, ghw, ghw_hierarchy, hierarchy,
                      rank_in_cube, rank_in_window, rghw, rghw_explain, rho,
                      rho_clipped, rm_dim, veca)

__version__ = "0.1.0"

__all__ = [
    "CodePair", "ClippedWindow", "Field", "FieldElement", "LeakageProfile",
    "PartialInfo", "ShareVector", "Window", "brute_min_shadow",
    "brute_min_support", "brute_profile", "case_of", "cmp_antilex", "cmp_lex",
    "codim2", "conway_polynomial", "degree", "dual_order", "encode",
    "enumerate_elements", "extremal_subspace", "field_from_order",
    "field_new", "ghw", "ghw2",
    "ghw2_dim", "ghw_hierarchy", "hierarchy", "leakage", "leakage_dim",
    "local_correct_a", "local_correct_b", "lower_shadow", "lower_shadow_size",
    "mu", "profile", "rank_in_cube", "rank_in_window", "read_shares",
    "reconstruct", "rghw", "rghw2", "rghw_explain", "rghw_minus_ghw_special",
    "rho", "rho_clipped", "rm_dim", "simulate_correction", "upward_shadow",
    "upward_shadow_size", "veca", "window_members", "write_shares",
]
