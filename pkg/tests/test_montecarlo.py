import numpy as np
import pytest

import mallows_secretary.montecarlo as mc
from mallows_secretary.montecarlo import (
    EstimateReport,
    _worker_shares,
    estimate_inversion_moment,
    estimate_success,
)
from mallows_secretary.policy import success_probability_exact


def test_single_item_is_certain():
    report = estimate_success(1, 0, 0.8, samples=500, base_seed=3)
    assert report.estimate == 1.0
    assert report.std_error == 0.0


def test_worker_shares_spread_remainder_to_low_indices():
    assert _worker_shares(10, 3) == [4, 3, 3]
    assert _worker_shares(3, 5) == [1, 1, 1, 0, 0]
    assert _worker_shares(8, 1) == [8]
    with pytest.raises(ValueError):
        _worker_shares(8, 0)


def test_reports_are_reproducible_bit_exact():
    a = estimate_success(30, 7, 0.6, samples=20000, base_seed=17, workers=3)
    b = estimate_success(30, 7, 0.6, samples=20000, base_seed=17, workers=3)
    assert a == b
    assert isinstance(a, EstimateReport)
    assert (a.base_seed, a.workers, a.samples) == (17, 3, 20000)


def test_chunk_size_does_not_change_the_stream(monkeypatch):
    baseline = estimate_success(25, 6, 0.7, samples=5000, base_seed=5)
    monkeypatch.setattr(mc, "_CHUNK_ELEMENTS", 1024)
    chunked = estimate_success(25, 6, 0.7, samples=5000, base_seed=5)
    assert baseline == chunked


def test_different_seeds_decorrelate():
    estimates = {
        estimate_success(30, 7, 0.6, samples=5000, base_seed=s).estimate
        for s in range(10)
    }
    assert len(estimates) > 1


def test_matches_exact_formula_within_three_sigma():
    exact = success_probability_exact(20, 5, 0.5).value
    report = estimate_success(20, 5, 0.5, samples=10**5, base_seed=2024)
    assert abs(report.estimate - exact) < 3 * report.std_error


def test_large_sample_agreement_small_n():
    # 10/21 at (n=3, m=1, q=0.5), a million samples
    report = estimate_success(3, 1, 0.5, samples=10**6, base_seed=77)
    assert abs(report.estimate - 10 / 21) < 3 * report.std_error


def test_workers_partition_the_stream():
    merged = estimate_success(15, 3, 0.8, samples=6000, base_seed=9, workers=3)
    parts = [estimate_success(15, 3, 0.8, samples=2000, base_seed=9 + i) for i in range(3)]
    hits = sum(round(p.estimate * p.samples) for p in parts)
    assert merged.estimate == hits / 6000


def test_success_domain_errors():
    with pytest.raises(ValueError):
        estimate_success(5, 5, 0.5, samples=10)
    with pytest.raises(ValueError):
        estimate_success(5, 2, 1.2, samples=10)
    with pytest.raises(ValueError):
        estimate_success(5, 2, 0.5, samples=0)


def test_inversion_moment_uniform_mean():
    # E[inversions] = n(n-1)/4 under the uniform law
    report = estimate_inversion_moment(6, 1.0, samples=40000, scaling_exponent=2.0,
                                       base_seed=11)
    assert report.estimate == pytest.approx(30 / 4 / 36, rel=0.03)
    assert report.std_error > 0


def test_inversion_moment_reproducible_and_scaled():
    a = estimate_inversion_moment(100, 0.9, samples=300, scaling_exponent=1.0, base_seed=8)
    b = estimate_inversion_moment(100, 0.9, samples=300, scaling_exponent=2.0, base_seed=8)
    assert a == estimate_inversion_moment(100, 0.9, samples=300, scaling_exponent=1.0,
                                          base_seed=8)
    assert a.estimate == pytest.approx(b.estimate * 100, rel=1e-12)
    assert a.std_error == pytest.approx(b.std_error * 100, rel=1e-12)


def test_inversion_moment_single_sample_has_zero_error():
    report = estimate_inversion_moment(50, 0.5, samples=1, scaling_exponent=1.0, base_seed=1)
    assert report.std_error == 0.0


def test_inversion_moment_domain_errors():
    with pytest.raises(ValueError):
        estimate_inversion_moment(0, 0.5, samples=5, scaling_exponent=1.0)
    with pytest.raises(ValueError):
        estimate_inversion_moment(5, 0.5, samples=5, scaling_exponent=0.0)
    with pytest.raises(ValueError):
        estimate_inversion_moment(5, 0.0, samples=5, scaling_exponent=1.0)
