"""Gaussian-mixture noise with independent real and imaginary parts."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["GaussianMixtureNoise", "MixtureComponent", "impulsive_mixture", "sample_noise"]

_PROB_SUM_TOL = 1e-12


@dataclass(frozen=True)
class MixtureComponent:
    """One Gaussian component: selection probability, mean, standard deviation."""

    probability: float
    mean: float
    std: float

    def __post_init__(self):
        if not 0.0 <= self.probability <= 1.0:
            raise ValueError(f"component probability must be in [0, 1], got {self.probability}")
        if not np.isfinite(self.mean):
            raise ValueError(f"component mean must be finite, got {self.mean}")
        if not np.isfinite(self.std) or self.std <= 0:
            raise ValueError(f"component std must be positive and finite, got {self.std}")


@dataclass(frozen=True)
class GaussianMixtureNoise:
    """Mixture model applied independently to the real and imaginary parts."""

    components: tuple[MixtureComponent, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("noise model needs at least one component")
        total = sum(c.probability for c in self.components)
        if abs(total - 1.0) > _PROB_SUM_TOL:
            raise ValueError(f"component probabilities must sum to 1, got {total!r}")

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([c.probability for c in self.components])

    @property
    def means(self) -> np.ndarray:
        return np.array([c.mean for c in self.components])

    @property
    def stds(self) -> np.ndarray:
        return np.array([c.std for c in self.components])

    def per_part_variance(self) -> float:
        """Analytic variance of one part: ``E[X^2] - E[X]^2`` under the mixture."""
        p, m, s = self.probabilities, self.means, self.stds
        return float(np.sum(p * (s * s + m * m)) - np.sum(p * m) ** 2)


def impulsive_mixture(
    background_std: float = 0.05,
    outlier_std: float = 5.0,
    outlier_probability: float = 0.05,
) -> GaussianMixtureNoise:
    """Two-component zero-mean mixture: mostly small noise, occasional large outliers."""
    return GaussianMixtureNoise(
        (
            MixtureComponent(1.0 - outlier_probability, 0.0, background_std),
            MixtureComponent(outlier_probability, 0.0, outlier_std),
        )
    )


def _sample_part(model: GaussianMixtureNoise, rng: np.random.Generator, n: int) -> np.ndarray:
    idx = rng.choice(len(model.components), size=n, p=model.probabilities)
    return rng.normal(model.means[idx], model.stds[idx])


def sample_noise(model: GaussianMixtureNoise, rng: np.random.Generator, size: int | None = None):
    """Draw complex noise; each part independently picks a component, then samples it.

    Returns a single python complex when ``size`` is None, else a complex
    array of the given length. The real part of the whole batch is drawn
    before the imaginary part, which fixes the stream layout for a given
    generator state.
    """
    n = 1 if size is None else int(size)
    if n < 1:
        raise ValueError(f"size must be at least 1, got {size}")
    re = _sample_part(model, rng, n)
    im = _sample_part(model, rng, n)
    values = re + 1j * im
    return complex(values[0]) if size is None else values
