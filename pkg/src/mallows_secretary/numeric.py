"""Small numerically careful primitives shared across the package.

The recurring hazard is cancellation in ``1 - q**k`` and ``log(q)`` when q is
within ~1e-6 of 1 while k runs up to 1e6 (the weakly biased regimes).  All
powers of q go through ``exp(k*log(q))`` with a log1p/expm1 route.
"""

from __future__ import annotations

import math

import numpy as np

LOG_HALF = -math.log(2.0)


def log_stable(q: float) -> float:
    """log(q) without the cancellation of computing log near 1 directly."""
    if q > 0.5:
        return math.log1p(q - 1.0)
    return math.log(q)


def log1mexp(x: float) -> float:
    """log(1 - exp(x)) for x < 0."""
    if x >= 0.0:
        raise ValueError(f"log1mexp requires x < 0, got {x}")
    if x > LOG_HALF:
        return math.log(-math.expm1(x))
    return math.log1p(-math.exp(x))


def one_minus_pow(q: float, k: float) -> float:
    """1 - q**k for q in (0, 1], k >= 0, stable when k*log(q) is tiny."""
    return -math.expm1(k * log_stable(q))


def one_minus_pow_arr(q: float, k: np.ndarray) -> np.ndarray:
    """Vector version of one_minus_pow."""
    return -np.expm1(np.asarray(k, dtype=np.float64) * log_stable(q))


def log_one_minus_pow_arr(q: float, k: np.ndarray) -> np.ndarray:
    """log(1 - q**k) elementwise, selecting the branch that avoids log(0)/log1p loss."""
    x = np.asarray(k, dtype=np.float64) * log_stable(q)
    out = np.empty_like(x)
    near = x > LOG_HALF  # q^k close to 1: use log(-expm1)
    out[near] = np.log(-np.expm1(x[near]))
    out[~near] = np.log1p(-np.exp(x[~near]))
    return out
