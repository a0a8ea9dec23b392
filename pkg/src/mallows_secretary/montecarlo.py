"""Simulation cross-checks: estimate by sampling what the formulas predict.

Work is split across logical workers.  Worker i owns the stream seeded with
base_seed + i and a fixed share of the samples (even split, remainder to the
lowest indices).  Per-worker tallies are integers, so the aggregate is the
same no matter how or where the workers actually run; results are bit-exact
functions of (base_seed, workers, samples).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import merge_count_rows, place_rows
from .mallows import sample_insertion_counts
from .policy import ThresholdStrategy, play_many

# rows per sampling chunk are sized to keep the uniform-draw buffer ~32 MB
_CHUNK_ELEMENTS = 1 << 22


@dataclass(frozen=True)
class EstimateReport:
    """Point estimate with its sampling error and reproducibility provenance."""

    estimate: float
    samples: int
    std_error: float
    base_seed: int
    workers: int


def _worker_shares(samples: int, workers: int) -> list[int]:
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    base, extra = divmod(samples, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def _chunks(total: int, n: int):
    step = max(1, _CHUNK_ELEMENTS // max(n, 1))
    done = 0
    while done < total:
        take = min(step, total - done)
        yield take
        done += take


def estimate_success(
    n: int, m: int, q: float, samples: int, base_seed: int = 0, workers: int = 1
) -> EstimateReport:
    """Fraction of sampled arrival orders on which the cutoff strategy wins.

    Draws permutations from Mallows(n, q), applies the cutoff-m strategy, and
    counts successes as integers.  std_error is sqrt(p(1-p)/samples).
    """
    ThresholdStrategy(m, n)
    if not 0.0 < q <= 1.0:
        raise ValueError(f"q must lie in (0, 1], got {q!r}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    hits = 0
    for i, share in enumerate(_worker_shares(samples, workers)):
        rng = np.random.default_rng(base_seed + i)
        for rows in _chunks(share, n):
            x = sample_insertion_counts(n, q, rows, rng)
            hits += int(play_many(place_rows(x), m).sum())
    p_hat = hits / samples
    std_error = (p_hat * (1.0 - p_hat) / samples) ** 0.5
    return EstimateReport(p_hat, samples, std_error, base_seed, workers)


def estimate_inversion_moment(
    n: int,
    q: float,
    samples: int,
    scaling_exponent: float,
    base_seed: int = 0,
    workers: int = 1,
) -> EstimateReport:
    """Sample mean of inversions/n^scaling_exponent under Mallows(n, q).

    Inversion counts are totalled as exact integers (first and second moments)
    before any float division, so worker order cannot perturb the result.
    std_error is the sample standard deviation over sqrt(samples).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < q <= 1.0:
        raise ValueError(f"q must lie in (0, 1], got {q!r}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if scaling_exponent <= 0:
        raise ValueError(f"scaling_exponent must be > 0, got {scaling_exponent}")
    total = 0
    total_sq = 0
    for i, share in enumerate(_worker_shares(samples, workers)):
        rng = np.random.default_rng(base_seed + i)
        for rows in _chunks(share, n):
            x = sample_insertion_counts(n, q, rows, rng)
            invs = merge_count_rows(place_rows(x))
            total += int(invs.sum())
            total_sq += sum(int(v) * int(v) for v in invs)
    scale = float(n) ** scaling_exponent
    estimate = total / samples / scale
    if samples > 1:
        # unbiased variance from exact integer moments
        var_numer = total_sq * samples - total * total
        std_error = (var_numer / (samples - 1)) ** 0.5 / samples / scale
    else:
        std_error = 0.0
    return EstimateReport(estimate, samples, std_error, base_seed, workers)
