import math

import numpy as np
import pytest
from scipy.special import spence

from mallows_secretary.asymptotics import (
    RegimeSpec,
    inversion_limit_weak,
    moderate_window,
    predict,
    strong_limit_probability,
    strong_window,
    weak_limit_objective,
    weak_threshold_fraction,
)

E_INV = 1 / math.e


def golden_maximum(f, lo, hi, tol=1e-8):
    """Golden-section search for the maximizer of a unimodal f on [lo, hi]."""
    ratio = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    x1, x2 = b - ratio * (b - a), a + ratio * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - ratio * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + ratio * (b - a)
            f2 = f(x2)
    return 0.5 * (a + b)


class TestWeakThresholdFraction:
    def test_small_c_limit_is_one_over_e(self):
        assert weak_threshold_fraction(1e-10) == pytest.approx(E_INV, abs=1e-9)

    def test_large_c_limit_is_one(self):
        assert weak_threshold_fraction(1e3) == pytest.approx(1.0, abs=2e-3)
        assert weak_threshold_fraction(1e6) == pytest.approx(1.0, abs=2e-6)

    def test_value_at_one(self):
        assert weak_threshold_fraction(1.0) == pytest.approx(0.48988012564475, abs=1e-13)

    def test_continuous_across_overflow_branch(self):
        assert weak_threshold_fraction(500.0) == pytest.approx(
            weak_threshold_fraction(500.0000001), rel=1e-9
        )

    def test_matches_numerical_maximizer(self):
        for c in [0.1, 1.0, 5.0, 20.0]:
            found = golden_maximum(lambda b: weak_limit_objective(b, c), 1e-9, 1 - 1e-9)
            assert abs(found - weak_threshold_fraction(c)) < 1e-6

    def test_domain(self):
        with pytest.raises(ValueError):
            weak_threshold_fraction(0.0)
        with pytest.raises(ValueError):
            weak_threshold_fraction(-2.0)


class TestWeakLimitObjective:
    def test_vanishes_at_edges(self):
        for c in [0.5, 1.0, 10.0]:
            assert weak_limit_objective(1e-9, c) < 1e-6
            assert weak_limit_objective(1 - 1e-12, c) < 1e-6

    def test_equals_one_over_e_at_optimum(self):
        for c in [0.1, 1.0, 5.0, 20.0]:
            value = weak_limit_objective(weak_threshold_fraction(c), c)
            assert abs(value - E_INV) < 1e-10

    def test_below_maximum_off_optimum(self):
        assert weak_limit_objective(0.3, 1.0) < E_INV

    def test_domain(self):
        with pytest.raises(ValueError):
            weak_limit_objective(0.0, 1.0)
        with pytest.raises(ValueError):
            weak_limit_objective(1.0, 1.0)
        with pytest.raises(ValueError):
            weak_limit_objective(0.5, 0.0)


class TestModerateWindow:
    def test_values(self):
        assert moderate_window(10**4, 0.5, 1.0) == pytest.approx(99.49916247342216)
        assert moderate_window(10**6, 0.5, 2.0) == pytest.approx(499.49983316645523)

    def test_ratio_to_leading_order_tends_to_one(self):
        previous = None
        for n in [10**3, 10**5, 10**7, 10**9]:
            ratio = moderate_window(n, 0.5, 1.0) / (n**0.5 / 1.0)
            gap = abs(ratio - 1.0)
            if previous is not None:
                assert gap < previous
            previous = gap
        assert previous < 1e-4

    def test_domain(self):
        with pytest.raises(ValueError):
            moderate_window(10, 0.5, 4.0)  # c/n^alpha >= 1
        with pytest.raises(ValueError):
            moderate_window(10, 1.2, 0.5)
        with pytest.raises(ValueError):
            moderate_window(0, 0.5, 0.5)


class TestStrongWindow:
    def test_examples(self):
        assert strong_window(0.5) == 1
        assert strong_window(0.7) == 3
        assert strong_window(2 / 3) == 2  # stored double sits just below 2/3
        assert strong_window(0.9) == 10  # stored double sits just above 9/10
        assert strong_window(1e-9) == 1

    def test_step_boundaries(self):
        for L in range(1, 21):
            boundary = L / (L + 1)
            assert strong_window(np.nextafter(boundary, 0.0)) == L
            assert strong_window(np.nextafter(boundary, 1.0)) == L + 1

    def test_domain(self):
        with pytest.raises(ValueError):
            strong_window(0.0)
        with pytest.raises(ValueError):
            strong_window(1.0)


class TestStrongLimitProbability:
    def test_equals_one_minus_q_below_half(self):
        for q in [0.05, 0.3, 0.5]:
            assert strong_limit_probability(q) == pytest.approx(1 - q, abs=1e-15)

    def test_example_win_rates(self):
        assert strong_limit_probability(0.3) == pytest.approx(0.7)
        assert strong_limit_probability(0.7) == pytest.approx(0.441, abs=1e-12)

    def test_beats_uniform_limit_everywhere(self):
        for q in np.linspace(0.01, 0.999, 800):
            assert strong_limit_probability(float(q)) > E_INV + 1e-9

    def test_tends_to_one_over_e(self):
        value = strong_limit_probability(0.99)
        assert E_INV < value < 1.0
        assert strong_limit_probability(1 - 1e-6) == pytest.approx(E_INV, abs=1e-5)


class TestInversionLimit:
    def test_small_c_limit(self):
        assert inversion_limit_weak(1e-6) == pytest.approx(0.25, abs=1e-6)

    def test_large_c_tends_to_zero(self):
        assert inversion_limit_weak(30.0) < 0.04

    def test_strictly_decreasing_on_log_grid(self):
        values = [inversion_limit_weak(float(c)) for c in np.logspace(-3, np.log10(30), 25)]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert all(0.0 < v < 0.25 for v in values)

    def test_value_at_one(self):
        v = inversion_limit_weak(1.0)
        assert 0.0 < v < 0.25
        assert v == pytest.approx(0.2224953658877520, abs=1e-12)

    def test_against_riemann_sum(self):
        for c in [0.1, 1.0, 2.0, 5.0]:
            upper = -math.expm1(-c)
            panels = 10**6
            x = (np.arange(panels) + 0.5) * (upper / panels)
            integrand = 1.0 / (1.0 - x) + np.log1p(-x) / x
            riemann = integrand.sum() * (upper / panels) / c**2
            assert abs(inversion_limit_weak(c) - riemann) < 1e-7

    def test_against_dilogarithm(self):
        # the integral evaluates in closed form through the dilogarithm
        for c in [0.5, 1.0, 5.0, 10.0]:
            closed = (c - spence(math.exp(-c))) / c**2
            assert abs(inversion_limit_weak(c) - closed) < 1e-12

    def test_domain(self):
        with pytest.raises(ValueError):
            inversion_limit_weak(0.0)


class TestPredict:
    def test_strong(self):
        assert predict(RegimeSpec("strong", q=0.5), 100) == (99, 0.5)

    def test_weak(self):
        m_star, p_limit = predict(RegimeSpec("weak", c=1.0), 10**4)
        assert m_star == round(0.48988012564475 * 10**4) == 4899
        assert p_limit == pytest.approx(E_INV)

    def test_moderate(self):
        m_star, p_limit = predict(RegimeSpec("moderate", c=1.0, alpha=0.5), 10**4)
        assert m_star in (9900, 9901)
        assert p_limit == pytest.approx(E_INV)

    def test_strong_needs_enough_items(self):
        with pytest.raises(ValueError):
            predict(RegimeSpec("strong", q=0.95), 10)  # L = 19 > n

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            RegimeSpec("weak")
        with pytest.raises(ValueError):
            RegimeSpec("moderate", c=1.0)
        with pytest.raises(ValueError):
            RegimeSpec("strong", q=1.5)
        with pytest.raises(ValueError):
            RegimeSpec("strong", q=0.5, c=2.0)
        with pytest.raises(ValueError):
            RegimeSpec("sideways", c=1.0)
        with pytest.raises(ValueError):
            predict(RegimeSpec("weak", c=1.0), 0)
