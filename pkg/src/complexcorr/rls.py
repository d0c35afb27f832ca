"""Scalar complex recursive least squares and the closed-form LS oracle.

The single-tap specialization of exponentially-weighted RLS: the inverse
input-correlation term is a positive scalar rather than a matrix. With
``forgetting = 1`` and a large ``p0`` the recursion reproduces growing-window
least squares, which is also available in closed form as
``least_squares_weight``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .validation import check_complex_samples, check_equal_lengths, check_identifiable, check_weight

__all__ = ["RlsState", "least_squares_weight", "rls_init", "rls_update"]


@dataclass(frozen=True)
class RlsState:
    """Weight, scalar inverse-correlation term, and forgetting factor."""

    weight: complex
    inv_corr: float
    forgetting: float


def rls_init(w_init=0j, p0: float = 1e3, forgetting: float = 0.99) -> RlsState:
    """Build a fresh RLS state.

    ``p0`` is the initial inverse-correlation value; large values mean little
    confidence in ``w_init``. Defaults are conventional choices recorded in
    experiment metadata rather than tuned values.
    """
    p0 = float(p0)
    forgetting = float(forgetting)
    if not np.isfinite(p0) or p0 <= 0:
        raise ValueError(f"p0 must be positive and finite, got {p0}")
    if not 0.0 < forgetting <= 1.0:
        raise ValueError(f"forgetting factor must be in (0, 1], got {forgetting}")
    return RlsState(check_weight(w_init), p0, forgetting)


def rls_update(state: RlsState, x, d) -> RlsState:
    """One exponentially-weighted RLS step on a single complex sample.

    Gain ``k = p conj(x) / (lambda + |x|^2 p)``, innovation ``e = d - w x``,
    then ``w <- w + k e``. The inverse-correlation update
    ``p <- (p - k x p) / lambda`` simplifies algebraically to
    ``p / (lambda + |x|^2 p)``, which keeps ``p`` exactly real and positive;
    a zero input therefore leaves ``w`` unchanged and grows ``p`` by
    ``1 / lambda``.
    """
    x = complex(x)
    d = complex(d)
    lam = state.forgetting
    p = state.inv_corr
    denom = lam + (x.real * x.real + x.imag * x.imag) * p
    gain = p * x.conjugate() / denom
    err = d - state.weight * x
    return RlsState(state.weight + gain * err, p / denom, lam)


def least_squares_weight(inputs, desired) -> complex:
    """Closed-form least-squares weight ``sum(d conj(x)) / sum(|x|^2)``.

    Raises
    ------
    UnidentifiableDataError
        If every input sample is zero.
    """
    x = check_complex_samples(inputs, "inputs")
    d = check_complex_samples(desired, "desired")
    check_equal_lengths(x, d, ("inputs", "desired"))
    check_identifiable(x)
    return complex(np.sum(d * np.conj(x)) / np.sum((x * np.conj(x)).real))
