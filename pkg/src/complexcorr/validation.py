"""Input validation helpers shared by the estimators and the functional API.

All sample validation happens here, at the boundaries; the numerical kernels
assume clean data.
"""

from __future__ import annotations

import numpy as np

from .exceptions import UnidentifiableDataError

__all__ = [
    "check_bandwidth",
    "check_complex_samples",
    "check_equal_lengths",
    "check_identifiable",
    "check_real_samples",
    "check_weight",
]


def check_bandwidth(sigma) -> float:
    """Return ``sigma`` as a float, rejecting non-positive or non-finite values."""
    sigma = float(sigma)
    if not np.isfinite(sigma) or sigma <= 0.0:
        raise ValueError(f"kernel bandwidth must be positive and finite, got {sigma}")
    return sigma


def check_weight(w) -> complex:
    """Return ``w`` as a python complex with finite components."""
    w = complex(w)
    if not (np.isfinite(w.real) and np.isfinite(w.imag)):
        raise ValueError(f"filter weight must have finite components, got {w}")
    return w


def _as_1d(values, name: str) -> np.ndarray:
    arr = np.asarray(values)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must contain at least one sample")
    return arr


def check_real_samples(values, name: str = "values") -> np.ndarray:
    """Validate and return a nonempty 1-D float array with finite entries."""
    arr = _as_1d(values, name).astype(float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite (no NaN or Inf)")
    return arr


def check_complex_samples(values, name: str = "values") -> np.ndarray:
    """Validate and return a nonempty 1-D complex array with finite parts."""
    arr = _as_1d(values, name).astype(complex)
    if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
        raise ValueError(f"{name} must be finite (no NaN or Inf)")
    return arr


def check_equal_lengths(a, b, names=("first", "second")) -> None:
    """Raise if the two sample sets differ in length."""
    if len(a) != len(b):
        raise ValueError(
            f"{names[0]} and {names[1]} must have equal length, "
            f"got {len(a)} and {len(b)}"
        )


def check_identifiable(inputs: np.ndarray) -> None:
    """Raise if every input is zero (the single-tap weight would be arbitrary)."""
    if not np.any(inputs != 0):
        raise UnidentifiableDataError(
            "all input samples are zero; the filter weight is unidentifiable"
        )
