"""Exception types raised by the algorithms in this package."""


class UnidentifiableDataError(ValueError):
    """Every input sample is zero, so no filter weight can be identified."""


class KernelCollapseError(ArithmeticError):
    """All kernel weights underflowed to zero.

    Happens when the bandwidth is far too small for the residual scale; the
    fixed-point denominator becomes exactly zero and no update is possible.
    """


class QuadratureRangeError(ValueError):
    """Integration box does not cover the samples plus the required padding."""


class QuadratureConvergenceError(ArithmeticError):
    """Doubling the node count moved the quadrature result beyond tolerance."""


class ConfigError(ValueError):
    """Malformed, unknown, or out-of-range entry in a scenario config file."""
