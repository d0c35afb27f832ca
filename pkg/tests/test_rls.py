"""Complex RLS recursion and the closed-form least-squares oracle."""

import numpy as np
import pytest

from complexcorr import (
    UnidentifiableDataError,
    impulsive_mixture,
    least_squares_weight,
    rls_init,
    rls_update,
    sample_noise,
)

W_TRUE = 2.0 + 3.0j


def _stream(state, xs, ds):
    for x, d in zip(xs, ds):
        state = rls_update(state, x, d)
    return state


@pytest.mark.parametrize("forgetting", [1.0, 0.99])
def test_noiseless_stream_converges(forgetting):
    # a diffuse prior (large p0) is needed for the 1e-8 bound at 50 samples;
    # the prior pull decays like p_final / p0
    rng = np.random.default_rng(40)
    x = rng.normal(size=50) + 1j * rng.normal(size=50)
    state = _stream(rls_init(0j, 1e8, forgetting), x, W_TRUE * x)
    assert abs(state.weight - W_TRUE) < 1e-8


def test_zero_input_leaves_weight_and_scales_inv_corr():
    state = rls_init(1.0 + 1.0j, 10.0, 0.5)
    advanced = rls_update(state, 0j, 123.0 + 0j)
    assert advanced.weight == state.weight
    assert advanced.inv_corr == state.inv_corr / 0.5


def test_growing_window_matches_closed_form_ls():
    rng = np.random.default_rng(41)
    x = rng.normal(size=100) + 1j * rng.normal(size=100)
    d = W_TRUE * x + 0.3 * (rng.normal(size=100) + 1j * rng.normal(size=100))
    state = _stream(rls_init(0j, 1e8, 1.0), x, d)
    assert abs(state.weight - least_squares_weight(x, d)) < 1e-6


def test_growing_window_matches_ls_on_long_impulsive_stream():
    rng = np.random.default_rng(42)
    n = 1000
    x = rng.normal(size=n) + 1j * rng.normal(size=n)
    d = (0.8 - 0.4j) * x + sample_noise(impulsive_mixture(), rng, size=n)
    state = _stream(rls_init(0j, 1e8, 1.0), x, d)
    assert abs(state.weight - least_squares_weight(x, d)) < 1e-6


def test_inv_corr_stays_positive():
    rng = np.random.default_rng(43)
    state = rls_init(0j, 1e3, 0.99)
    for _ in range(500):
        state = rls_update(state, complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal()))
        assert state.inv_corr > 0.0


def test_rls_init_validation():
    with pytest.raises(ValueError):
        rls_init(0j, 0.0, 0.99)
    with pytest.raises(ValueError):
        rls_init(0j, 1e3, 0.0)
    with pytest.raises(ValueError):
        rls_init(0j, 1e3, 1.5)


def test_least_squares_noiseless_recovery():
    rng = np.random.default_rng(44)
    x = rng.normal(size=30) + 1j * rng.normal(size=30)
    assert least_squares_weight(x, W_TRUE * x) == pytest.approx(W_TRUE, rel=1e-14)


def test_least_squares_single_pair():
    assert least_squares_weight([1.0 + 0j], [2.0 + 2.0j]) == 2.0 + 2.0j


def test_least_squares_normal_equation_residual_vanishes():
    rng = np.random.default_rng(45)
    x = rng.normal(size=50) + 1j * rng.normal(size=50)
    d = rng.normal(size=50) + 1j * rng.normal(size=50)
    w = least_squares_weight(x, d)
    residual = np.sum((d - w * x) * np.conj(x))
    assert abs(residual) / np.sum(np.abs(d * np.conj(x))) < 1e-10


def test_least_squares_rejects_all_zero_inputs():
    with pytest.raises(UnidentifiableDataError):
        least_squares_weight([0j, 0j], [1j, 2j])
