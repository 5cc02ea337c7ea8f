"""Tunnel splittings of one-dimensional asymmetric double wells.

Semiclassical doublet energies built from the barrier action, evaluated
three ways (closed formula, quadratic level shifts, transcendental
quantization roots) and cross-checked against an exact finite-difference
eigensolver.

Typical use:

    >>> import tunnelkit as tk
    >>> spec = tk.BiasedQuartic(alpha=3.0, a=1.0, beta=0.15)
    >>> analysis = tk.analyze(spec)
    >>> result = tk.compute_splitting(spec, analysis=analysis)
    >>> result.delta_E  # doctest: +SKIP
"""

from .actions import (
    ActionResult,
    AsymptoticActionParts,
    action_slope,
    asymptotic_action,
    double_oscillator_action,
    evaluate_action,
    gamow_integral,
    parabolic_fidelity,
    turning_points,
)
from .config import (
    RunConfig,
    SweepSpec,
    Tolerances,
    ValidityThresholds,
    load_config,
    parse_config,
)
from .errors import (
    ConfigError,
    DegenerateBarrier,
    DomainError,
    DomainTooSmall,
    EnergyAboveBarrier,
    EnergyBelowWellBottom,
    FewerThanTwoMinima,
    FitIllConditioned,
    GridTooCoarse,
    LambdaOutOfRange,
    NonConvexMinimum,
    NumericsError,
    OutOfSupportedRange,
    QuadratureNonConvergence,
    RegimeError,
    RootNotBracketed,
    TunnelkitError,
    WellStructureError,
)
from .oracle import GridSpec, Spectrum, default_grid, eigen_lowest_two
from .potentials import (
    DEFAULT_CONSTANTS,
    BiasedQuartic,
    DoubleOscillator,
    Mirrored,
    PhysConstants,
    Polynomial,
    WellAnalysis,
    analyze,
    evaluate,
    evaluate_d1,
    evaluate_d2,
    mirror,
)
from .quadrature import adaptive_quadrature, panel_quadrature
from .splitting import (
    K_FIRST_ORDER,
    LevelShifts,
    QuantizationResult,
    SplittingResult,
    compute_splitting,
    delta_first_order,
    f_of_zeta,
    g_of_zeta,
    gamma_fn,
    level_shifts,
    level_splitting,
    solve_quantization,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ActionResult",
    "AsymptoticActionParts",
    "BiasedQuartic",
    "ConfigError",
    "DEFAULT_CONSTANTS",
    "DegenerateBarrier",
    "DomainError",
    "DomainTooSmall",
    "DoubleOscillator",
    "EnergyAboveBarrier",
    "EnergyBelowWellBottom",
    "FewerThanTwoMinima",
    "FitIllConditioned",
    "GridSpec",
    "GridTooCoarse",
    "K_FIRST_ORDER",
    "LambdaOutOfRange",
    "LevelShifts",
    "Mirrored",
    "NonConvexMinimum",
    "NumericsError",
    "OutOfSupportedRange",
    "PhysConstants",
    "Polynomial",
    "QuadratureNonConvergence",
    "QuantizationResult",
    "RegimeError",
    "RootNotBracketed",
    "RunConfig",
    "Spectrum",
    "SplittingResult",
    "SweepSpec",
    "Tolerances",
    "TunnelkitError",
    "ValidityThresholds",
    "WellAnalysis",
    "WellStructureError",
    "action_slope",
    "adaptive_quadrature",
    "analyze",
    "asymptotic_action",
    "compute_splitting",
    "default_grid",
    "delta_first_order",
    "double_oscillator_action",
    "eigen_lowest_two",
    "evaluate",
    "evaluate_action",
    "evaluate_d1",
    "evaluate_d2",
    "f_of_zeta",
    "g_of_zeta",
    "gamma_fn",
    "gamow_integral",
    "level_shifts",
    "level_splitting",
    "load_config",
    "mirror",
    "panel_quadrature",
    "parabolic_fidelity",
    "parse_config",
    "solve_quantization",
    "turning_points",
]
