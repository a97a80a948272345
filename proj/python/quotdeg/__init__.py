"""Exact Quot-scheme degrees and the rank-2 Frobenius-pullback degree bound.

All exact quantities cross the boundary as ``int`` / ``fractions.Fraction``;
floats appear only in the cross-check paths (``bound_trig``,
``brute_force_degree`` and the ``rel_err`` report fields).
"""

from ._quotdeg import (
    CrossCheckFailure,
    DimensionPositive,
    NonIntegerSign,
    NonInvertible,
    NonRationalResult,
    ParameterError,
    PolynomialInP,
    QuotParams,
    bound_exact,
    bound_polynomial,
    bound_report,
    bound_trig,
    brute_force_degree,
    cyclotomic,
    derive_params,
    eval_polynomial,
    g2_comparison,
    holla_degree,
    is_zero_dimensional,
    nontrivial_root_sum,
    pushforward_degrees,
    quotf_degree_bound,
    specialize,
)

__all__ = [
    "CrossCheckFailure",
    "DimensionPositive",
    "NonIntegerSign",
    "NonInvertible",
    "NonRationalResult",
    "ParameterError",
    "PolynomialInP",
    "QuotParams",
    "bound_exact",
    "bound_polynomial",
    "bound_report",
    "bound_trig",
    "brute_force_degree",
    "cyclotomic",
    "derive_params",
    "eval_polynomial",
    "g2_comparison",
    "holla_degree",
    "is_zero_dimensional",
    "nontrivial_root_sum",
    "pushforward_degrees",
    "quotf_degree_bound",
    "specialize",
]

__version__ = "0.1.0"
