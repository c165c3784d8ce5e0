"""Binned run-expectancy models: plain averages and partial pooling."""

from .baseline import RexModel, fit_rex
from .bayes import (
    BayesRexState,
    PooledRexModel,
    RexPriorConfig,
    calibrate_sigma_prior,
    fit_bayes_rex,
    sample_bin_means,
)
from .bins import BinSpec, assign_bin, assign_bins

__all__ = [
    "BayesRexState",
    "BinSpec",
    "PooledRexModel",
    "RexModel",
    "RexPriorConfig",
    "assign_bin",
    "assign_bins",
    "calibrate_sigma_prior",
    "fit_bayes_rex",
    "fit_rex",
    "sample_bin_means",
]
