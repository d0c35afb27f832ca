"""Complex correntropy, MCCC adaptive filtering, and an impulsive-noise benchmark.

The package provides three layers:

* similarity measures: ``real_correntropy``, ``complex_correntropy``, the
  Parzen machinery behind them, and a numerical-integration oracle;
* single-tap adaptive filters: the correntropy-maximising fixed-point solver
  (batch and streaming) plus a complex RLS baseline, exposed both as
  functions and as sklearn-style estimators;
* a seeded Monte Carlo harness comparing the two filters on system
  identification under Gaussian-mixture (impulsive) noise, with a CLI.
"""

from .correntropy import (
    QuadratureSpec,
    complex_correntropy,
    complex_correntropy_by_quadrature,
    complex_correntropy_peak,
    mean_squared_gap,
    real_correntropy,
)
from .estimators import ComplexRLS, MCCCFilter
from .exceptions import (
    ConfigError,
    KernelCollapseError,
    QuadratureConvergenceError,
    QuadratureRangeError,
    UnidentifiableDataError,
)
from .kernels import gaussian_kernel, gaussian_kernel_peak, parzen_density
from .mccc import (
    FixedPointResult,
    RecursiveMcccState,
    batch_fixed_point,
    mccc_cost,
    mccc_recursive_init,
    mccc_recursive_update,
    residual_kernel_weights,
)
from .noise import GaussianMixtureNoise, MixtureComponent, impulsive_mixture, sample_noise
from .rls import RlsState, least_squares_weight, rls_init, rls_update
from .simulation import (
    ALGORITHMS,
    MonteCarloReport,
    ScenarioConfig,
    monte_carlo,
    run_trial,
    trial_seeds,
    wsnr_db,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "ComplexRLS",
    "ConfigError",
    "FixedPointResult",
    "GaussianMixtureNoise",
    "KernelCollapseError",
    "MCCCFilter",
    "MixtureComponent",
    "MonteCarloReport",
    "QuadratureConvergenceError",
    "QuadratureRangeError",
    "QuadratureSpec",
    "RecursiveMcccState",
    "RlsState",
    "ScenarioConfig",
    "UnidentifiableDataError",
    "batch_fixed_point",
    "complex_correntropy",
    "complex_correntropy_by_quadrature",
    "complex_correntropy_peak",
    "gaussian_kernel",
    "gaussian_kernel_peak",
    "impulsive_mixture",
    "least_squares_weight",
    "mccc_cost",
    "mccc_recursive_init",
    "mccc_recursive_update",
    "mean_squared_gap",
    "monte_carlo",
    "parzen_density",
    "real_correntropy",
    "residual_kernel_weights",
    "rls_init",
    "rls_update",
    "run_trial",
    "sample_noise",
    "trial_seeds",
    "wsnr_db",
]
