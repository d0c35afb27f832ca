"""Correntropy estimators against their defining integral and spec values."""

import math

import numpy as np
import pytest

from complexcorr import (
    QuadratureConvergenceError,
    QuadratureRangeError,
    QuadratureSpec,
    complex_correntropy,
    complex_correntropy_by_quadrature,
    complex_correntropy_peak,
    gaussian_kernel,
    mean_squared_gap,
    real_correntropy,
)

SQRT_2PI = math.sqrt(2.0 * math.pi)


def _random_complex(rng, n):
    return rng.normal(size=n) + 1j * rng.normal(size=n)


# ---------------------------------------------------------------------------
# real correntropy
# ---------------------------------------------------------------------------


def test_real_correntropy_identical_sets():
    rng = np.random.default_rng(4)
    x = rng.normal(size=13)
    assert real_correntropy(x, x, 1.0) == pytest.approx(1.0 / SQRT_2PI, rel=1e-12)


def test_real_correntropy_single_pair():
    assert real_correntropy([0.0], [1.0], 1.0) == pytest.approx(0.241971, abs=1e-6)


def test_real_correntropy_sum_decomposition():
    # oracle: per-term kernel evaluations averaged by hand
    rng = np.random.default_rng(5)
    x, y = rng.normal(size=10), rng.normal(size=10)
    expected = sum(gaussian_kernel(xi - yi, 0.7) for xi, yi in zip(x, y)) / 10.0
    assert real_correntropy(x, y, 0.7) == pytest.approx(expected, rel=1e-14)


def test_real_correntropy_bounds():
    rng = np.random.default_rng(6)
    x, y = rng.normal(size=40), rng.normal(size=40)
    value = real_correntropy(x, y, 1.0)
    assert 0.0 < value < gaussian_kernel(0.0, 1.0)


def test_real_correntropy_length_mismatch():
    with pytest.raises(ValueError):
        real_correntropy([0.0, 1.0], [0.0], 1.0)


# ---------------------------------------------------------------------------
# complex correntropy
# ---------------------------------------------------------------------------


def test_complex_correntropy_identical_sets_reaches_peak():
    rng = np.random.default_rng(7)
    c = _random_complex(rng, 9)
    value = complex_correntropy(c, c, 0.5)
    assert value == pytest.approx(1.0 / math.pi, rel=1e-12)
    assert value == pytest.approx(0.318310, abs=1e-6)
    assert value == pytest.approx(complex_correntropy_peak(0.5), rel=1e-14)


def test_complex_correntropy_single_pair():
    value = complex_correntropy([1.0 + 0.0j], [0.0 + 0.0j], 1.0)
    assert value == pytest.approx(math.exp(-0.25) / (4.0 * math.pi), rel=1e-12)
    assert value == pytest.approx(0.061975, abs=1e-6)


def test_complex_correntropy_symmetric():
    rng = np.random.default_rng(8)
    c1, c2 = _random_complex(rng, 17), _random_complex(rng, 17)
    for sigma in (0.5, 1.0, 2.0):
        assert complex_correntropy(c1, c2, sigma) == complex_correntropy(c2, c1, sigma)


def test_complex_correntropy_bounds_strict_below_peak():
    rng = np.random.default_rng(9)
    c1, c2 = _random_complex(rng, 25), _random_complex(rng, 25)
    for sigma in (0.5, 1.0, 2.0):
        value = complex_correntropy(c1, c2, sigma)
        assert 0.0 < value < complex_correntropy_peak(sigma)


def test_complex_correntropy_matches_quadrature():
    rng = np.random.default_rng(10)
    for sigma in (0.5, 1.0, 2.0):
        c1, c2 = _random_complex(rng, 10), _random_complex(rng, 10)
        closed = complex_correntropy(c1, c2, sigma)
        integral = complex_correntropy_by_quadrature(c1, c2, sigma)
        assert abs(closed - integral) / closed < 1e-6


def test_complex_correntropy_length_mismatch():
    with pytest.raises(ValueError):
        complex_correntropy([1j, 0j], [1j], 1.0)


def test_complex_correntropy_rejects_nonfinite():
    with pytest.raises(ValueError):
        complex_correntropy([np.nan + 0j], [0j], 1.0)
    with pytest.raises(ValueError):
        complex_correntropy([0j], [complex(0, np.inf)], 1.0)


def test_purely_real_sets_reduce_to_scaled_real_correntropy():
    # zero imaginary residuals still contribute one kernel factor, so the
    # complex measure at bandwidth s equals the real one at s*sqrt(2) scaled
    # by the kernel peak; exact up to float roundoff from reordered products
    rng = np.random.default_rng(11)
    x, y = rng.normal(size=15), rng.normal(size=15)
    for sigma in (0.5, 1.0, 2.0):
        s = sigma * math.sqrt(2.0)
        lhs = complex_correntropy(x.astype(complex), y.astype(complex), sigma)
        rhs = real_correntropy(x, y, s) * gaussian_kernel(0.0, s)
        assert lhs == pytest.approx(rhs, rel=1e-14)


def test_large_bandwidth_remainder_decays_as_fourth_power():
    # E(sigma) = |4 pi sigma^2 V - (1 - m2 / (4 sigma^2))| must shrink ~16x
    # per bandwidth doubling for bounded samples
    rng = np.random.default_rng(12)
    c1 = rng.uniform(-2.0, 2.0, 16) + 1j * rng.uniform(-2.0, 2.0, 16)
    c2 = rng.uniform(-2.0, 2.0, 16) + 1j * rng.uniform(-2.0, 2.0, 16)
    m2 = mean_squared_gap(c1, c2)

    def remainder(sigma):
        v = complex_correntropy(c1, c2, sigma)
        return abs(4.0 * math.pi * sigma**2 * v - (1.0 - m2 / (4.0 * sigma**2)))

    for sigma in (10.0, 20.0, 40.0):
        ratio = remainder(sigma) / remainder(2.0 * sigma)
        assert 8.0 <= ratio <= 32.0


# ---------------------------------------------------------------------------
# mean squared gap
# ---------------------------------------------------------------------------


def test_mean_squared_gap_zero_for_identical():
    rng = np.random.default_rng(13)
    c = _random_complex(rng, 8)
    assert mean_squared_gap(c, c) == 0.0


def test_mean_squared_gap_unit_example():
    assert mean_squared_gap([1.0 + 1.0j], [0.0j]) == 2.0


def test_mean_squared_gap_elementwise_oracle():
    rng = np.random.default_rng(14)
    c1, c2 = _random_complex(rng, 100), _random_complex(rng, 100)
    expected = sum(abs(a - b) ** 2 for a, b in zip(c1, c2)) / 100.0
    assert mean_squared_gap(c1, c2) == pytest.approx(expected, rel=1e-13)


def test_mean_squared_gap_length_mismatch():
    with pytest.raises(ValueError):
        mean_squared_gap([1j], [1j, 2j])


# ---------------------------------------------------------------------------
# quadrature oracle behaviour
# ---------------------------------------------------------------------------


def test_quadrature_analytic_point_value():
    # both samples at the origin: the integral is the squared L2 norm of the
    # kernel on each axis, (1/(2 sigma sqrt(pi)))^2 = 1/(4 pi) at sigma = 1
    value = complex_correntropy_by_quadrature([0.0j], [0.0j], 1.0)
    assert value == pytest.approx(1.0 / (4.0 * math.pi), rel=1e-9)
    assert value == pytest.approx(0.079577, abs=1e-6)


def test_quadrature_explicit_box_must_cover_samples():
    rng = np.random.default_rng(15)
    c1, c2 = _random_complex(rng, 5), _random_complex(rng, 5)
    with pytest.raises(QuadratureRangeError):
        complex_correntropy_by_quadrature(c1, c2, 0.5, QuadratureSpec(half_width=1.0))
    # generous box passes and agrees with the closed form
    value = complex_correntropy_by_quadrature(c1, c2, 0.5, QuadratureSpec(half_width=30.0))
    assert value == pytest.approx(complex_correntropy(c1, c2, 0.5), rel=1e-6)


def test_quadrature_detects_insufficient_nodes():
    rng = np.random.default_rng(16)
    c1, c2 = _random_complex(rng, 6), _random_complex(rng, 6)
    with pytest.raises(QuadratureConvergenceError):
        complex_correntropy_by_quadrature(c1, c2, 0.5, QuadratureSpec(nodes=4))


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(nodes=1)
    with pytest.raises(ValueError):
        QuadratureSpec(tolerance=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(padding_sigmas=4.0)
    with pytest.raises(ValueError):
        QuadratureSpec(half_width=-2.0)
