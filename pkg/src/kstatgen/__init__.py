"""Exact unbiased estimators of cumulants and moment products.

Generates k-statistics, h-statistics, multivariate k-statistics and
U-statistics as closed-form polynomials in power sums with coefficients
rational in the symbolic sample size n, verifies them against a
brute-force expectation oracle, and evaluates them on data samples.
"""

from .combinatorics import (IntPartition, SetPartition, all_set_partitions,
                            block_size_signature, integer_partitions,
                            set_partitions)
from .coefficients import (CoefRat, NPoly, chi_falling_moment,
                           falling_factorial)
from .errors import CostWarning, PoleError, ResourceLimitError, ShapeError
from .estimators import (augmented_poly_to_power_sums,
                         augmented_to_power_sums, bell_polynomial,
                         central_moment_in_moments, complete_in_power_sums,
                         cumulant_in_moments, elementary_in_power_sums,
                         h_statistic, k_statistic, monomial_in_augmented,
                         multivariate_k_statistic)
from .evaluator import Sample, evaluate, minimum_sample_size, power_sums
from .expansions import (expand_chi_dot_product, joint_cumulant_in_moments,
                         power_product_to_augmented, subordinated_moment,
                         u_statistic, unit_monomials)
from .oracle import expectation, moment_value, numeric_check
from .render import from_json, render_latex, render_text, to_json
from .sympoly import AugPoly, MomentPoly, MultiIndex, SymPoly

__version__ = "0.1.0"

__all__ = [
    "AugPoly", "CoefRat", "CostWarning", "IntPartition", "MomentPoly",
    "MultiIndex", "NPoly", "PoleError", "ResourceLimitError", "Sample",
    "SetPartition", "ShapeError", "SymPoly", "all_set_partitions",
    "augmented_poly_to_power_sums", "augmented_to_power_sums",
    "bell_polynomial", "block_size_signature", "central_moment_in_moments",
    "chi_falling_moment", "complete_in_power_sums", "cumulant_in_moments",
    "elementary_in_power_sums", "evaluate", "expand_chi_dot_product",
    "expectation", "falling_factorial", "from_json", "h_statistic",
    "integer_partitions", "joint_cumulant_in_moments", "k_statistic",
    "minimum_sample_size", "moment_value", "monomial_in_augmented",
    "multivariate_k_statistic", "numeric_check", "power_product_to_augmented",
    "power_sums", "render_latex", "render_text", "set_partitions",
    "subordinated_moment", "to_json", "u_statistic", "unit_monomials",
]
