"""Threshold strategies and their exact success probabilities.

The strategy with cutoff m rejects the first m arrivals and then accepts the
first arrival whose rank beats everything seen among the first m (the last
arrival if none does).  Under Mallows(q) arrival bias with q in (0, 1) the
probability of ending on the top-ranked item has the closed form

    P(n, m, q) = (1-q)/(1-q^n) * q^(n-m-1) * (1-q^m) * sum_{j=m+1..n} 1/(1-q^(j-1))

for m >= 1, and (1-q) q^(n-1) / (1-q^n) for m = 0.  The prefactor is evaluated
in log space (q^(n-m-1) underflows long before the result does); the sum stays
in linear space with stable 1-q^k terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numeric import one_minus_pow, one_minus_pow_arr, log_one_minus_pow_arr, log_stable
from .permutations import ArrayLike


@dataclass(frozen=True)
class ThresholdStrategy:
    """Reject the first m of n arrivals, then take the first record."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.m <= self.n - 1:
            raise ValueError(f"m must lie in [0, n-1], got m={self.m}, n={self.n}")


@dataclass(frozen=True)
class SuccessProbability:
    """A success probability with the (n, m, q) it belongs to."""

    value: float
    n: int
    m: int
    q: float

    def __post_init__(self) -> None:
        if not -1e-9 <= self.value <= 1.0 + 1e-9:
            raise ValueError(f"probability out of range: {self.value!r}")
        object.__setattr__(self, "value", min(max(self.value, 0.0), 1.0))


def play(p: ArrayLike, strategy: ThresholdStrategy) -> tuple[int, bool]:
    """Run one arrival sequence; returns (selected position 1-based, got the best item).

    With m = 0 the first arrival is taken.  With m >= 1 the first arrival
    beating the best of the first m is taken; if none ever does, the final
    arrival is accepted by force.
    """
    arr = np.asarray(p)
    n, m = strategy.n, strategy.m
    if arr.shape != (n,):
        raise ValueError(f"permutation has shape {arr.shape}, strategy has n={n}")
    if m == 0:
        return 1, bool(arr[0] == n)
    best = arr[:m].max()
    for j in range(m, n):
        if arr[j] > best:
            return j + 1, bool(arr[j] == n)
    return n, bool(arr[n - 1] == n)


def play_many(perms: np.ndarray, m: int) -> np.ndarray:
    """Vectorized success flags of play() over the rows of a permutation batch."""
    perms = np.asarray(perms)
    rows, n = perms.shape
    ThresholdStrategy(m, n)
    if m == 0:
        return perms[:, 0] == n
    best = perms[:, :m].max(axis=1)
    beats = perms[:, m:] > best[:, np.newaxis]
    any_beat = beats.any(axis=1)
    chosen = perms[np.arange(rows), m + np.argmax(beats, axis=1)]
    return np.where(any_beat, chosen == n, perms[:, -1] == n)


def success_probability_exact(n: int, m: int, q: float) -> SuccessProbability:
    """Closed-form success probability for q in (0, 1); O(n-m) time."""
    ThresholdStrategy(m, n)
    if not 0.0 < q < 1.0:
        raise ValueError(
            f"q must lie in (0, 1), got {q!r}; use success_probability_uniform for q=1"
        )
    logq = log_stable(q)
    log_pref = math.log1p(-q) - math.log(one_minus_pow(q, n)) + (n - m - 1) * logq
    if m == 0:
        value = math.exp(log_pref)
    else:
        tail = 1.0 / one_minus_pow_arr(q, np.arange(m, n))  # j-1 = m..n-1
        value = math.exp(log_pref + math.log(one_minus_pow(q, m)) + math.log(tail.sum()))
    return SuccessProbability(value, n, m, q)


def success_probability_uniform(n: int, m: int) -> SuccessProbability:
    """Uniformly random arrivals (the q -> 1 boundary): (m/n) sum_{j=m+1..n} 1/(j-1)."""
    ThresholdStrategy(m, n)
    if m == 0:
        value = 1.0 / n
    else:
        value = (m / n) * float(np.sum(1.0 / np.arange(m, n, dtype=np.float64)))
    return SuccessProbability(value, n, m, 1.0)


def success_probabilities(n: int, q: float) -> np.ndarray:
    """P(n, m, q) for every cutoff m = 0..n-1 in one O(n) pass (q = 1 allowed)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < q <= 1.0:
        raise ValueError(f"q must lie in (0, 1], got {q!r}")
    out = np.empty(n)
    if q == 1.0:
        out[0] = 1.0 / n
        if n > 1:
            m = np.arange(1, n, dtype=np.float64)
            inv_k = 1.0 / np.arange(1, n, dtype=np.float64)
            tails = np.cumsum(inv_k[::-1])[::-1]  # sum_{k=m..n-1} 1/k
            out[1:] = (m / n) * tails
        return np.clip(out, 0.0, 1.0)
    logq = log_stable(q)
    log_edge = math.log1p(-q) - math.log(one_minus_pow(q, n))
    out[0] = math.exp(log_edge + (n - 1) * logq)
    if n > 1:
        m = np.arange(1, n)
        t = 1.0 / one_minus_pow_arr(q, np.arange(1, n))
        tails = np.cumsum(t[::-1])[::-1]  # sum over j-1 = m..n-1
        log_p = log_edge + (n - m - 1) * logq + log_one_minus_pow_arr(q, m) + np.log(tails)
        out[1:] = np.exp(log_p)
    return np.clip(out, 0.0, 1.0)


def optimal_threshold(n: int, q: float) -> tuple[int, SuccessProbability]:
    """Best cutoff for given (n, q), with its exact success probability.

    Moving the cutoff from m to m+1 helps iff (1-q) * sum_{j=m+2..n}
    1/(1-q^(j-1)) >= q (harmonic form sum_{k=m+1..n-1} 1/k >= 1 when q = 1),
    and the left side is strictly decreasing in m, so P is unimodal over
    m >= 1 and the scan is O(n) overall.  The marginal rule is used instead of
    an argmax over evaluated probabilities because near the strong-bias step
    boundaries adjacent cutoffs differ by less than a double ulp after the
    exp/log evaluation; the marginal comparison keeps those sub-ulp margins.
    Where even it saturates (the tail terms 1/(1-q^k) round down to exactly 1)
    equality means the true tail is still above q, so the scan keeps moving
    right, which is the true argmax.  The m = 0 edge is compared last and wins
    ties, so genuinely equal optima report the smaller cutoff.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < q <= 1.0:
        raise ValueError(f"q must lie in (0, 1], got {q!r}")
    if n == 1:
        return 0, _evaluate(n, 0, q)
    if q == 1.0:
        r = 1.0 / np.arange(1, n, dtype=np.float64)
    else:
        r = (1.0 - q) / one_minus_pow_arr(q, np.arange(1, n))
    tails = np.concatenate([np.cumsum(r[::-1])[::-1], [0.0]])  # tails[k-1] = sum r_k..r_{n-1}
    # stop at the first m (1-based) whose move to m+1 strictly hurts
    worse = tails[1:n] < q  # entry m-1 <-> tail starting at k=m+1
    hits = np.nonzero(worse)[0]
    m_star = int(hits[0]) + 1 if hits.size else n - 1
    best = _evaluate(n, m_star, q)
    at_zero = _evaluate(n, 0, q)
    if at_zero.value >= best.value:
        return 0, at_zero
    return m_star, best


def _evaluate(n: int, m: int, q: float) -> SuccessProbability:
    if q == 1.0:
        return success_probability_uniform(n, m)
    return success_probability_exact(n, m, q)
