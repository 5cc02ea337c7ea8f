"""Exception hierarchy.

Three broad classes matter to callers (and map onto CLI exit codes):
configuration problems (``ConfigError``, exit 2), physical-regime
violations (``RegimeError``, exit 3), and numerical non-convergence
(``NumericsError``, exit 4).
"""

__all__ = [
    "TunnelkitError",
    "ConfigError",
    "FitIllConditioned",
    "RegimeError",
    "WellStructureError",
    "FewerThanTwoMinima",
    "NonConvexMinimum",
    "DegenerateBarrier",
    "EnergyAboveBarrier",
    "EnergyBelowWellBottom",
    "LambdaOutOfRange",
    "RootNotBracketed",
    "GridTooCoarse",
    "DomainTooSmall",
    "NumericsError",
    "QuadratureNonConvergence",
    "DomainError",
    "OutOfSupportedRange",
]


class TunnelkitError(Exception):
    """Base class for everything raised deliberately by this package."""


class ConfigError(TunnelkitError):
    """Invalid parameters, malformed config documents, unknown keys."""


class FitIllConditioned(ConfigError):
    """Sweep fit requested with too few points or a zero-width range."""


class RegimeError(TunnelkitError):
    """The requested computation is outside its physical regime."""


class WellStructureError(RegimeError):
    """The potential does not have the two-minima/one-maximum shape."""


class FewerThanTwoMinima(WellStructureError):
    """Fewer than two local minima found in the scanned window."""


class NonConvexMinimum(WellStructureError):
    """A detected minimum has non-positive curvature."""


class DegenerateBarrier(RegimeError):
    """Barrier top at or below the mean doublet energy; WKB inapplicable."""


class EnergyAboveBarrier(RegimeError):
    """Requested energy at or above the barrier maximum."""


class EnergyBelowWellBottom(RegimeError):
    """Requested energy at or below a well floor on the relevant side."""


class LambdaOutOfRange(RegimeError):
    """Energy fraction lambda = E / barrier outside its valid interval."""


class RootNotBracketed(RegimeError):
    """A root solve could not establish a sign change."""


class GridTooCoarse(RegimeError):
    """Grid halving moved the eigenvalue splitting by more than 10%."""


class DomainTooSmall(RegimeError):
    """Eigensolver domain lacks the required margin around the wells."""


class NumericsError(TunnelkitError):
    """Numerical procedure failed to converge."""


class QuadratureNonConvergence(NumericsError):
    """Adaptive quadrature hit its refinement limit without converging."""


class DomainError(TunnelkitError, ValueError):
    """Function evaluated outside its mathematical domain."""


class OutOfSupportedRange(DomainError):
    """Argument outside the interval the implementation supports."""
