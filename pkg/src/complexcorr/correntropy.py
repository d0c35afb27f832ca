"""Correntropy similarity measures for real- and complex-valued samples.

Correntropy is the Parzen-estimated probability that two random variables are
equal; it aggregates all even moments of their difference. For complex
variables the estimate reduces to the mean product of Gaussian kernels with
bandwidth ``sigma * sqrt(2)`` applied to the real-part and imaginary-part
residuals. ``complex_correntropy_by_quadrature`` evaluates the defining
density integral numerically and serves as an independent oracle for that
closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import QuadratureConvergenceError, QuadratureRangeError
from .kernels import gaussian_kernel, gaussian_kernel_peak
from .validation import (
    check_bandwidth,
    check_complex_samples,
    check_equal_lengths,
    check_real_samples,
)

__all__ = [
    "QuadratureSpec",
    "complex_correntropy",
    "complex_correntropy_by_quadrature",
    "complex_correntropy_peak",
    "mean_squared_gap",
    "real_correntropy",
]

_SQRT2 = np.sqrt(2.0)


def real_correntropy(x, y, sigma) -> float:
    """Correntropy between two real sample sets.

    ``mean_n G_sigma(x_n - y_n)``; lies in ``(0, gaussian_kernel_peak(sigma)]``
    with the maximum reached only when the sets coincide.
    """
    x = check_real_samples(x, "x")
    y = check_real_samples(y, "y")
    check_equal_lengths(x, y, ("x", "y"))
    return float(np.mean(gaussian_kernel(x - y, sigma)))


def complex_correntropy(c1, c2, sigma) -> float:
    """Correntropy between two complex sample sets.

    ``mean_n G_s(Re(c1_n - c2_n)) * G_s(Im(c1_n - c2_n))`` with
    ``s = sigma * sqrt(2)``. Equivalently the mean of
    ``exp(-|c1_n - c2_n|^2 / (4 sigma^2)) / (4 pi sigma^2)``, so the value
    lies in ``(0, 1/(4 pi sigma^2)]``.

    Note that a pair of purely real sample sets does *not* reproduce
    ``real_correntropy`` at the same bandwidth: the zero imaginary residuals
    still contribute one kernel factor, so the result equals
    ``real_correntropy(x, y, sigma*sqrt(2))`` scaled by
    ``gaussian_kernel_peak(sigma*sqrt(2))``.
    """
    c1 = check_complex_samples(c1, "c1")
    c2 = check_complex_samples(c2, "c2")
    check_equal_lengths(c1, c2, ("c1", "c2"))
    s = check_bandwidth(sigma) * _SQRT2
    terms = gaussian_kernel(c1.real - c2.real, s) * gaussian_kernel(c1.imag - c2.imag, s)
    return float(np.mean(terms))


def complex_correntropy_peak(sigma) -> float:
    """Largest attainable complex correntropy, reached when the sets coincide."""
    return gaussian_kernel_peak(check_bandwidth(sigma) * _SQRT2) ** 2


def mean_squared_gap(c1, c2) -> float:
    """Mean squared modulus of the elementwise difference, ``mean_n |c1_n - c2_n|^2``."""
    c1 = check_complex_samples(c1, "c1")
    c2 = check_complex_samples(c2, "c2")
    check_equal_lengths(c1, c2, ("c1", "c2"))
    diff = c1 - c2
    return float(np.mean(diff.real * diff.real + diff.imag * diff.imag))


@dataclass(frozen=True)
class QuadratureSpec:
    """Grid parameters for the density-integral evaluation.

    Attributes
    ----------
    half_width : float or None
        Half-width of an integration box centred at the origin, applied to
        both axes. ``None`` selects the box automatically from the sample
        range plus ``padding_sigmas`` bandwidths on each side.
    nodes : int
        Trapezoid nodes per axis (the convergence check doubles this).
    tolerance : float
        Maximum relative change allowed when the node count is doubled.
    padding_sigmas : float
        Padding beyond the sample range, in units of the kernel bandwidth,
        used when ``half_width`` is None. An explicit box must cover the
        samples plus at least 6 bandwidths.
    """

    half_width: float | None = None
    nodes: int = 257
    tolerance: float = 1e-9
    padding_sigmas: float = 8.0

    def __post_init__(self):
        if self.nodes < 2:
            raise ValueError(f"nodes must be at least 2, got {self.nodes}")
        if self.tolerance <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.padding_sigmas < 6.0:
            raise ValueError(
                f"padding_sigmas must be at least 6, got {self.padding_sigmas}"
            )
        if self.half_width is not None and self.half_width <= 0:
            raise ValueError(f"half_width must be positive, got {self.half_width}")


def _trapezoid_weights(lo: float, hi: float, nodes: int):
    grid = np.linspace(lo, hi, nodes)
    spacing = (hi - lo) / (nodes - 1)
    weights = np.full(nodes, spacing)
    weights[0] = weights[-1] = 0.5 * spacing
    return grid, weights


def _diagonal_density_integral(c1, c2, kernel_sigma, axes, nodes) -> float:
    # Integrand at (u1, u2): the 4-D product-kernel Parzen estimate of the
    # joint density of (Re c1, Re c2, Im c1, Im c2) evaluated on the plane
    # where the real parts agree (= u1) and the imaginary parts agree (= u2).
    (lo1, hi1), (lo2, hi2) = axes
    u1, w1 = _trapezoid_weights(lo1, hi1, nodes)
    u2, w2 = _trapezoid_weights(lo2, hi2, nodes)
    k1 = gaussian_kernel(u1[:, None] - c1.real[None, :], kernel_sigma) * gaussian_kernel(
        u1[:, None] - c2.real[None, :], kernel_sigma
    )
    k2 = gaussian_kernel(u2[:, None] - c1.imag[None, :], kernel_sigma) * gaussian_kernel(
        u2[:, None] - c2.imag[None, :], kernel_sigma
    )
    grid = (k1 @ k2.T) / c1.size  # grid[i, j] = density at (u1[i], u2[j])
    return float(w1 @ grid @ w2)


def complex_correntropy_by_quadrature(c1, c2, sigma, spec: QuadratureSpec | None = None) -> float:
    """Complex correntropy evaluated by numerical integration of its density form.

    Builds the 4-D Parzen estimate of the joint sample density with
    per-coordinate Gaussian kernels of bandwidth ``sigma``, restricts it to
    the plane where the real parts of both variables agree and the imaginary
    parts agree, and integrates over that plane with the composite trapezoid
    rule. The node count is then doubled and the two results must agree
    within ``spec.tolerance``, otherwise the quadrature is declared
    unconverged.

    Deliberately independent of the closed form in ``complex_correntropy``;
    use it to validate that closed form.

    Raises
    ------
    QuadratureRangeError
        If an explicit box does not cover every sample plus 6 bandwidths.
    QuadratureConvergenceError
        If doubling the nodes changes the result by more than the tolerance.
    """
    c1 = check_complex_samples(c1, "c1")
    c2 = check_complex_samples(c2, "c2")
    check_equal_lengths(c1, c2, ("c1", "c2"))
    sigma = check_bandwidth(sigma)
    if spec is None:
        spec = QuadratureSpec()

    re_vals = np.concatenate([c1.real, c2.real])
    im_vals = np.concatenate([c1.imag, c2.imag])
    if spec.half_width is None:
        pad = spec.padding_sigmas * sigma
        axes = (
            (re_vals.min() - pad, re_vals.max() + pad),
            (im_vals.min() - pad, im_vals.max() + pad),
        )
    else:
        needed = max(np.abs(re_vals).max(), np.abs(im_vals).max()) + 6.0 * sigma
        if spec.half_width < needed:
            raise QuadratureRangeError(
                f"integration half-width {spec.half_width} does not cover the "
                f"samples plus 6 bandwidths (needs at least {needed:.6g})"
            )
        axes = ((-spec.half_width, spec.half_width),) * 2

    coarse = _diagonal_density_integral(c1, c2, sigma, axes, spec.nodes)
    fine = _diagonal_density_integral(c1, c2, sigma, axes, 2 * spec.nodes - 1)
    if abs(fine - coarse) > spec.tolerance * max(abs(fine), np.finfo(float).tiny):
        raise QuadratureConvergenceError(
            f"doubling the node count moved the integral from {coarse!r} to "
            f"{fine!r}; increase nodes or widen the box"
        )
    return fine
