"""Secretary problem with Mallows-biased arrival order.

Exact success probabilities and optimal cutoffs for threshold strategies when
the arrival permutation is Mallows(q)-distributed, the asymptotic theory for
the weak/moderate/strong bias regimes, an exact sampler, and Monte Carlo
cross-validation.
"""

from .asymptotics import (
    RegimeSpec,
    inversion_limit_weak,
    moderate_window,
    predict,
    strong_limit_probability,
    strong_window,
    weak_limit_objective,
    weak_threshold_fraction,
)
from .mallows import MallowsModel, permutation_from_insertions, sample_x_j
from .montecarlo import EstimateReport, estimate_inversion_moment, estimate_success
from .permutations import inverse, inversion_count, is_permutation, reverse
from .policy import (
    SuccessProbability,
    ThresholdStrategy,
    optimal_threshold,
    play,
    play_many,
    success_probabilities,
    success_probability_exact,
    success_probability_uniform,
)

__version__ = "0.1.0"

__all__ = [
    "EstimateReport",
    "MallowsModel",
    "RegimeSpec",
    "SuccessProbability",
    "ThresholdStrategy",
    "estimate_inversion_moment",
    "estimate_success",
    "inverse",
    "inversion_count",
    "inversion_limit_weak",
    "is_permutation",
    "moderate_window",
    "optimal_threshold",
    "permutation_from_insertions",
    "play",
    "play_many",
    "predict",
    "reverse",
    "sample_x_j",
    "strong_limit_probability",
    "strong_window",
    "success_probabilities",
    "success_probability_exact",
    "success_probability_uniform",
    "weak_limit_objective",
    "weak_threshold_fraction",
]
