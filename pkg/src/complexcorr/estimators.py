"""Scikit-learn style estimators for the single-tap adaptive filters.

Both estimators model ``predicted = weight_ * X`` for complex scalar inputs.
``fit`` consumes a whole dataset at once; ``partial_fit`` advances the
streaming update and may be called repeatedly with successive chunks of the
stream. Parameters follow sklearn conventions (stored verbatim, validated at
fit time), so ``get_params``/``set_params``/``clone`` and hyper-parameter
search compose as usual.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .mccc import batch_fixed_point, mccc_cost, mccc_recursive_init, mccc_recursive_update
from .rls import rls_init, rls_update
from .validation import check_complex_samples, check_equal_lengths

__all__ = ["ComplexRLS", "MCCCFilter"]


def _check_stream(X, y):
    x = check_complex_samples(X, "X")
    d = check_complex_samples(y, "y")
    check_equal_lengths(x, d, ("X", "y"))
    return x, d


class MCCCFilter(BaseEstimator):
    """Single-tap filter trained by maximising complex correntropy.

    A robust alternative to least squares for complex-valued system
    identification: the Gaussian kernel discounts samples with large
    residuals, so impulsive noise barely moves the weight.

    Parameters
    ----------
    sigma : float, default 0.5
        Kernel bandwidth. Small values suppress outliers aggressively;
        large values make the solution approach least squares.
    max_iter : int, default 100
        Fixed-point iteration budget for ``fit``.
    tol : float, default 1e-12
        Convergence threshold on the weight step for ``fit``.
    w_init : complex, default 0j
        Starting weight for ``fit`` and for the first ``partial_fit`` call.
    epsilon : float, default 1e-3
        Positive regulariser seeding the streaming denominator.

    Attributes
    ----------
    weight_ : complex
        Estimated tap.
    n_iter_ : int
        Fixed-point iterations used by the last ``fit``.
    converged_ : bool
        Whether the last ``fit`` met ``tol`` within ``max_iter``.
    """

    def __init__(self, sigma=0.5, max_iter=100, tol=1e-12, w_init=0j, epsilon=1e-3):
        self.sigma = sigma
        self.max_iter = max_iter
        self.tol = tol
        self.w_init = w_init
        self.epsilon = epsilon

    def fit(self, X, y):
        """Estimate the tap from a full dataset by batch fixed-point iteration."""
        x, d = _check_stream(X, y)
        result = batch_fixed_point(
            x, d, self.sigma, w_init=self.w_init, max_iter=self.max_iter, tol=self.tol
        )
        self.weight_ = result.weight
        self.n_iter_ = result.n_iter
        self.converged_ = result.converged
        self._state = None
        return self

    def partial_fit(self, X, y):
        """Advance the streaming estimate over one chunk of samples."""
        x, d = _check_stream(X, y)
        state = getattr(self, "_state", None)
        if state is None:
            state = mccc_recursive_init(self.w_init, self.epsilon)
        for xi, di in zip(x, d):
            state = mccc_recursive_update(state, xi, di, self.sigma)
        self._state = state
        self.weight_ = state.weight
        return self

    def predict(self, X):
        """Filter output ``weight_ * X``."""
        self._check_fitted()
        return self.weight_ * check_complex_samples(X, "X")

    def score(self, X, y):
        """Complex correntropy between ``y`` and the predictions (higher is better)."""
        self._check_fitted()
        x, d = _check_stream(X, y)
        return mccc_cost(self.weight_, x, d, self.sigma)

    def _check_fitted(self):
        if not hasattr(self, "weight_"):
            raise NotFittedError(
                "this MCCCFilter instance is not fitted yet; call fit or partial_fit first"
            )


class ComplexRLS(BaseEstimator):
    """Single-tap exponentially-weighted recursive least squares.

    The conventional baseline the correntropy filter is benchmarked against.

    Parameters
    ----------
    forgetting : float, default 0.99
        Exponential forgetting factor in (0, 1]; 1 gives a growing window.
    p0 : float, default 1e3
        Initial inverse-correlation value.
    w_init : complex, default 0j
        Starting weight.

    Attributes
    ----------
    weight_ : complex
        Estimated tap.
    """

    def __init__(self, forgetting=0.99, p0=1e3, w_init=0j):
        self.forgetting = forgetting
        self.p0 = p0
        self.w_init = w_init

    def fit(self, X, y):
        """Run the recursion once over the dataset from a fresh state."""
        self._state = None
        return self.partial_fit(X, y)

    def partial_fit(self, X, y):
        """Advance the recursion over one chunk of samples."""
        x, d = _check_stream(X, y)
        state = getattr(self, "_state", None)
        if state is None:
            state = rls_init(self.w_init, self.p0, self.forgetting)
        for xi, di in zip(x, d):
            state = rls_update(state, xi, di)
        self._state = state
        self.weight_ = state.weight
        return self

    def predict(self, X):
        """Filter output ``weight_ * X``."""
        self._check_fitted()
        return self.weight_ * check_complex_samples(X, "X")

    def score(self, X, y):
        """Negative mean squared residual modulus (higher is better)."""
        self._check_fitted()
        x, d = _check_stream(X, y)
        residual = d - self.weight_ * x
        return -float(np.mean(residual.real**2 + residual.imag**2))

    def _check_fitted(self):
        if not hasattr(self, "weight_"):
            raise NotFittedError(
                "this ComplexRLS instance is not fitted yet; call fit or partial_fit first"
            )
