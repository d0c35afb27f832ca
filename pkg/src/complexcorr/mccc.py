"""Maximum complex correntropy criterion: cost and fixed-point weight solvers.

The model is a single complex tap, ``predicted = weight * input``. The batch
solver repeatedly substitutes the current weight into the closed-form
stationarity ratio until the weight stops moving; the recursive solver
accumulates the same numerator and denominator sums one sample at a time so
the weight can track a stream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import KernelCollapseError
from .kernels import gaussian_kernel
from .validation import (
    check_bandwidth,
    check_complex_samples,
    check_equal_lengths,
    check_identifiable,
    check_weight,
)

__all__ = [
    "FixedPointResult",
    "RecursiveMcccState",
    "batch_fixed_point",
    "mccc_cost",
    "mccc_recursive_init",
    "mccc_recursive_update",
    "residual_kernel_weights",
]

_SQRT2 = np.sqrt(2.0)


def _check_pair(inputs, desired):
    x = check_complex_samples(inputs, "inputs")
    d = check_complex_samples(desired, "desired")
    check_equal_lengths(x, d, ("inputs", "desired"))
    return x, d


def residual_kernel_weights(weight, inputs, desired, sigma):
    """Kernel factors of the real- and imaginary-part prediction residuals.

    Returns
    -------
    (g_re, g_im) : pair of ndarrays
        ``G_s(Re(d - w x))`` and ``G_s(Im(d - w x))`` with
        ``s = sigma * sqrt(2)``; each lies in ``(0, 1/(2 sigma sqrt(pi))]``.
    """
    weight = check_weight(weight)
    x, d = _check_pair(inputs, desired)
    s = check_bandwidth(sigma) * _SQRT2
    residual = d - weight * x
    return gaussian_kernel(residual.real, s), gaussian_kernel(residual.imag, s)


def mccc_cost(weight, inputs, desired, sigma) -> float:
    """Complex correntropy between the desired outputs and ``weight * inputs``.

    This is the objective the fixed-point solvers maximise; its global
    maximum ``1/(4 pi sigma^2)`` is attained only when every prediction is
    exact.
    """
    g_re, g_im = residual_kernel_weights(weight, inputs, desired, sigma)
    return float(np.mean(g_re * g_im))


@dataclass(frozen=True)
class FixedPointResult:
    """Outcome of the batch solver: final weight, iterations used, convergence flag."""

    weight: complex
    n_iter: int
    converged: bool


def batch_fixed_point(
    inputs,
    desired,
    sigma,
    w_init=0j,
    max_iter: int = 100,
    tol: float = 1e-12,
) -> FixedPointResult:
    """Maximise the correntropy cost over the whole dataset by fixed-point iteration.

    Each step evaluates the residual kernel factors at the current weight and
    replaces the weight with the closed-form ratio

    ``w <- sum_n g_n d_n conj(x_n) / sum_n g_n |x_n|^2``,

    where ``g_n`` is the product of the two kernel factors of sample ``n``.
    Iteration stops once the weight moves less than ``tol`` or after
    ``max_iter`` steps; the ``converged`` flag reports which happened.
    Convergence is not guaranteed for every bandwidth/data combination, so
    callers should inspect the flag.

    Raises
    ------
    UnidentifiableDataError
        If every input sample is zero.
    KernelCollapseError
        If all kernel factors underflow to zero (bandwidth far smaller than
        the residual scale), making the update denominator vanish.
    """
    x, d = _check_pair(inputs, desired)
    check_identifiable(x)
    sigma = check_bandwidth(sigma)
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")

    s = sigma * _SQRT2
    cross = d * np.conj(x)  # per-sample d conj(x); Re/Im are the two numerators
    power = (x * np.conj(x)).real

    w = check_weight(w_init)
    for iteration in range(1, max_iter + 1):
        residual = d - w * x
        g = gaussian_kernel(residual.real, s) * gaussian_kernel(residual.imag, s)
        denominator = float(np.sum(g * power))
        if denominator == 0.0:
            raise KernelCollapseError(
                "every kernel weight underflowed to zero; increase the "
                f"bandwidth (sigma={sigma}) or rescale the data"
            )
        w_new = complex(np.sum(g * cross) / denominator)
        step = abs(w_new - w)
        w = w_new
        if step < tol:
            return FixedPointResult(w, iteration, True)
    return FixedPointResult(w, max_iter, False)


@dataclass(frozen=True)
class RecursiveMcccState:
    """Accumulator state of the streaming fixed-point solver.

    ``weight`` always equals ``(num_re + 1j * num_im) / denom``, and ``denom``
    never decreases from its positive initial value, so the ratio stays
    well defined under any update sequence. Instances are immutable values;
    advance a stream by rebinding the result of ``mccc_recursive_update``.
    """

    num_re: float
    num_im: float
    denom: float
    weight: complex
    samples_seen: int = 0


def mccc_recursive_init(w_init=0j, epsilon: float = 1e-3) -> RecursiveMcccState:
    """Build the initial streaming state.

    The accumulators start at ``epsilon`` times the initial weight's
    components (and ``epsilon`` for the denominator), so the starting weight
    ratio is exactly ``w_init`` while the denominator is already positive.
    """
    epsilon = float(epsilon)
    if not np.isfinite(epsilon) or epsilon <= 0:
        raise ValueError(f"epsilon must be positive and finite, got {epsilon}")
    w = check_weight(w_init)
    return RecursiveMcccState(epsilon * w.real, epsilon * w.imag, epsilon, w, 0)


def mccc_recursive_update(state: RecursiveMcccState, x, d, sigma) -> RecursiveMcccState:
    """Consume one (input, desired) pair and return the advanced state.

    The kernel factors are evaluated with the state's current weight, then
    the accumulators absorb the new sample and the weight is refreshed from
    the accumulator ratio. A zero input leaves the state unchanged apart
    from the sample counter.
    """
    x = complex(x)
    d = complex(d)
    s = check_bandwidth(sigma) * _SQRT2
    residual = d - state.weight * x
    g = float(gaussian_kernel(residual.real, s)) * float(gaussian_kernel(residual.imag, s))
    cross = d * x.conjugate()
    num_re = state.num_re + g * cross.real
    num_im = state.num_im + g * cross.imag
    denom = state.denom + g * (x.real * x.real + x.imag * x.imag)
    weight = complex(num_re / denom, num_im / denom)
    return RecursiveMcccState(num_re, num_im, denom, weight, state.samples_seen + 1)
