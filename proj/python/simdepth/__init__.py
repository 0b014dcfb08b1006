"""Halfspace depth on the probability simplex."""

from ._simdepth import (
    BudgetError,
    ConvergenceError,
    DepthResult,
    OrderingVerdict,
    depth_approx,
    depth_brute,
    depth_exact_2d,
    eaton_olshen_probe,
    embed_simplex,
    is_majorized,
    max_depth_gamma,
    max_depth_limit_gamma,
    max_depth_mc,
    regularized_incomplete_beta,
    regularized_upper_gamma,
    run_fig3,
    sample_composition,
    sample_positive,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "ConvergenceError",
    "DepthResult",
    "OrderingVerdict",
    "depth_approx",
    "depth_brute",
    "depth_exact_2d",
    "eaton_olshen_probe",
    "embed_simplex",
    "is_majorized",
    "max_depth_gamma",
    "max_depth_limit_gamma",
    "max_depth_mc",
    "regularized_incomplete_beta",
    "regularized_upper_gamma",
    "run_fig3",
    "sample_composition",
    "sample_positive",
]
