"""Gaussian kernel and Parzen window density estimation."""

from __future__ import annotations

import numpy as np

from .validation import check_bandwidth

__all__ = ["gaussian_kernel", "gaussian_kernel_peak", "parzen_density"]

_SQRT_2PI = np.sqrt(2.0 * np.pi)


def gaussian_kernel(u, sigma):
    """Normalized Gaussian kernel ``exp(-u^2 / (2 sigma^2)) / (sqrt(2 pi) sigma)``.

    Parameters
    ----------
    u : float or ndarray
        Evaluation point(s).
    sigma : float
        Kernel bandwidth, > 0.

    Returns
    -------
    float or ndarray
        Kernel value(s); strictly positive and symmetric in ``u``.
    """
    sigma = check_bandwidth(sigma)
    u = np.asarray(u, dtype=float)
    value = np.exp(-(u * u) / (2.0 * sigma * sigma)) / (_SQRT_2PI * sigma)
    return float(value) if value.ndim == 0 else value


def gaussian_kernel_peak(sigma) -> float:
    """Kernel value at ``u = 0``, the maximum ``1 / (sqrt(2 pi) sigma)``."""
    return 1.0 / (_SQRT_2PI * check_bandwidth(sigma))


def parzen_density(samples, query, sigma) -> float:
    """Parzen window density estimate with a product Gaussian kernel.

    Averages, over the sample points, the product of one-dimensional kernels
    taken per coordinate:

    ``mean_n  prod_l  G_sigma(query[l] - samples[n, l])``

    Parameters
    ----------
    samples : array_like, shape (n_samples, n_dims) or (n_samples,)
        Sample points; a 1-D array is treated as points on the line.
    query : array_like, shape (n_dims,) or scalar
        Point at which the density is evaluated.
    sigma : float
        Kernel bandwidth, > 0, shared by all coordinates.

    Returns
    -------
    float
        Nonnegative density value; the estimate integrates to one over the
        whole space.

    Raises
    ------
    ValueError
        If the samples do not share a common dimension or the query dimension
        does not match.
    """
    sigma = check_bandwidth(sigma)
    try:
        samples = np.asarray(samples, dtype=float)
    except ValueError as exc:
        raise ValueError(f"samples must share a common dimension: {exc}") from None
    if samples.dtype == object:
        raise ValueError("samples must share a common dimension")
    if samples.ndim == 1:
        samples = samples[:, None]
    if samples.ndim != 2:
        raise ValueError(f"samples must be (n_samples, n_dims), got shape {samples.shape}")
    if samples.shape[0] == 0:
        raise ValueError("samples must contain at least one point")
    if not np.all(np.isfinite(samples)):
        raise ValueError("samples must be finite (no NaN or Inf)")

    query = np.atleast_1d(np.asarray(query, dtype=float))
    if query.shape != (samples.shape[1],):
        raise ValueError(
            f"query dimension {query.shape} does not match samples "
            f"dimension {samples.shape[1]}"
        )
    if not np.all(np.isfinite(query)):
        raise ValueError("query must be finite (no NaN or Inf)")

    kernels = gaussian_kernel(query[None, :] - samples, sigma)
    return float(np.mean(np.prod(kernels, axis=1)))
