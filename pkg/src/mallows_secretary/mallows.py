"""Mallows(q) distribution on permutations of {1..n}, q in (0, 1].

P(sigma) is proportional to q**inv(sigma).  Sampling uses the online
construction: independent truncated-geometric insertion counts X_j decide how
many previously placed values sit to the right of value j; the finished line,
read left to right, is the arrival order.  The construction yields exactly
sum_j X_j inversions, which is also what makes the normalization constant
Z_n(q) = prod_{k=2..n} (1-q^k)/(1-q) drop out.

q = 1 is the uniform boundary case.  q > 1 is intentionally not modeled; the
reverse-duality identity P^q(sigma) = P^{1/q}(reverse(sigma)) reduces it to
q < 1 and is exercised only in tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._kernels import place_rows
from .numeric import log_one_minus_pow_arr, log_stable, one_minus_pow_arr
from .permutations import ArrayLike, inversion_count

# below this distance from 1, truncated-geometric inversion would divide by
# log(q) ~ 0; the uniform branch is exact to fp accuracy there
UNIFORM_EPS = 1e-12


def _log_normalizer(n: int, q: float) -> float:
    if n <= 1:
        return 0.0
    if q == 1.0:
        return math.lgamma(n + 1)  # Z -> n! as q -> 1
    k = np.arange(2, n + 1)
    return float(np.sum(log_one_minus_pow_arr(q, k))) - (n - 1) * math.log1p(-q)


@dataclass
class MallowsModel:
    """Number of items n and bias q, with the log partition function cached."""

    n: int
    q: float
    log_normalizer: float = field(init=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not 0.0 < self.q <= 1.0:
            raise ValueError(f"q must lie in (0, 1], got {self.q!r}")
        self.n = int(self.n)
        self.q = float(self.q)
        self.log_normalizer = _log_normalizer(self.n, self.q)

    def log_pmf(self, p: ArrayLike) -> float:
        """log P(p) = inv(p)*log(q) - log Z_n(q); -log(n!) when q = 1."""
        arr = np.asarray(p)
        if arr.shape != (self.n,):
            raise ValueError(f"permutation has shape {arr.shape}, model has n={self.n}")
        if self.q == 1.0:
            return -self.log_normalizer
        return inversion_count(arr) * log_stable(self.q) - self.log_normalizer

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        """Draw one permutation in arrival order."""
        return self.sample_many(1, rng)[0]

    def sample_many(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """Draw ``count`` permutations as the rows of an int64 array."""
        if count < 0:
            raise ValueError(f"count must be nonnegative, got {count}")
        x = sample_insertion_counts(self.n, self.q, count, rng)
        return place_rows(x)


def sample_x_j(j: int, q: float, rng: np.random.Generator) -> int:
    """One insertion count for value j: P(X_j = m) = (1-q) q^m / (1-q^j), m in 0..j-1.

    Closed-form CDF inversion, no rejection; uniform on 0..j-1 when q = 1.
    """
    if j < 2:
        raise ValueError(f"j must be >= 2, got {j}")
    if not 0.0 < q <= 1.0:
        raise ValueError(f"q must lie in (0, 1], got {q!r}")
    u = rng.random()
    if 1.0 - q < UNIFORM_EPS:
        return min(int(u * j), j - 1)
    logq = log_stable(q)
    mass = -math.expm1(j * logq)  # 1 - q^j
    m = int(math.log1p(-u * mass) / logq)
    return min(max(m, 0), j - 1)


def sample_insertion_counts(
    n: int, q: float, count: int, rng: np.random.Generator
) -> np.ndarray:
    """Batch of (X_2, ..., X_n) rows, one row per future permutation."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < q <= 1.0:
        raise ValueError(f"q must lie in (0, 1], got {q!r}")
    js = np.arange(2, n + 1, dtype=np.float64)
    u = rng.random((count, n - 1))
    if 1.0 - q < UNIFORM_EPS:
        x = (u * js).astype(np.int64)
    else:
        logq = log_stable(q)
        mass = one_minus_pow_arr(q, js)
        x = np.floor(np.log1p(-u * mass) / logq).astype(np.int64)
    return np.clip(x, 0, (js - 1.0).astype(np.int64))


def permutation_from_insertions(x: ArrayLike) -> np.ndarray:
    """Deterministic placement of insertion counts (X_2, ..., X_n).

    Entry j-2 of ``x`` says how many already placed values lie to the right of
    value j.  The result has exactly sum(x) inversions.
    """
    arr = np.ascontiguousarray(x, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d sequence, got shape {arr.shape}")
    js = np.arange(2, arr.shape[0] + 2)
    if np.any(arr < 0) or np.any(arr >= js):
        raise ValueError("insertion count X_j must lie in [0, j-1]")
    return place_rows(arr[np.newaxis, :])[0]
