"""Run configuration: a small versioned JSON document.

Top-level shape (schema "tunnelkit/1"):

    {
      "schema": "tunnelkit/1",
      "potential": {"family": "biased_quartic", "alpha": 3.0, "a": 1.0,
                     "beta": 0.15},
      "constants": {"hbar": 1.0, "mass": 1.0},
      "oracle_grid": {"x_min": -4.0, "x_max": 4.0, "n_points": 8001,
                       "richardson": true},
      "sweep": {"parameter": "tilde_eps", "from": 0.0, "to": 0.1,
                 "steps": 11},
      "tolerances": {"quad_rtol": 1e-12},
      "validity_thresholds": {"max_eps_over_hw": 0.2, "max_gamow": 0.01}
    }

Every block except "schema" and "potential" is optional.  Unknown keys
anywhere are rejected, every number must be finite, and malformed input
raises ConfigError with the offending key named.
"""

import json
import math
from dataclasses import dataclass, field

from .errors import ConfigError
from .oracle import GridSpec
from .potentials import (
    BiasedQuartic,
    DoubleOscillator,
    Mirrored,
    PhysConstants,
    Polynomial,
)

__all__ = [
    "SCHEMA",
    "SweepSpec",
    "Tolerances",
    "ValidityThresholds",
    "RunConfig",
    "parse_config",
    "load_config",
]

SCHEMA = "tunnelkit/1"


@dataclass(frozen=True)
class SweepSpec:
    """Bias sweep: dial tilde_eps from start to stop in `steps` points."""

    parameter: str
    start: float
    stop: float
    steps: int


@dataclass(frozen=True)
class Tolerances:
    quad_rtol: float = 1e-12


@dataclass(frozen=True)
class ValidityThresholds:
    max_eps_over_hw: float = 0.2
    max_gamow: float = 1e-2


@dataclass(frozen=True)
class RunConfig:
    potential: object
    orient: str = "auto"
    constants: PhysConstants = field(default_factory=PhysConstants)
    oracle_grid: GridSpec | None = None
    sweep: SweepSpec | None = None
    tolerances: Tolerances = field(default_factory=Tolerances)
    validity_thresholds: ValidityThresholds = field(default_factory=ValidityThresholds)


def _reject_nonfinite(token):
    raise ConfigError(f"non-finite number {token!r} in config")


def _as_mapping(value, name):
    if not isinstance(value, dict):
        raise ConfigError(f'"{name}" must be an object')
    return value


def _check_keys(mapping, allowed, context):
    unknown = sorted(set(mapping) - set(allowed))
    if unknown:
        raise ConfigError(
            f"unknown key{'s' if len(unknown) > 1 else ''} in {context}: "
            + ", ".join(f'"{k}"' for k in unknown)
        )


def _number(mapping, key, context, default=None):
    if key not in mapping:
        if default is None:
            raise ConfigError(f'missing required key "{key}" in {context}')
        return float(default)
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f'"{key}" in {context} must be a number')
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f'"{key}" in {context} must be finite')
    return value


def _integer(mapping, key, context, default=None):
    if key not in mapping:
        if default is None:
            raise ConfigError(f'missing required key "{key}" in {context}')
        return int(default)
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f'"{key}" in {context} must be an integer')
    return value


def _boolean(mapping, key, context, default):
    value = mapping.get(key, default)
    if not isinstance(value, bool):
        raise ConfigError(f'"{key}" in {context} must be true or false')
    return value


def _parse_potential(block):
    block = _as_mapping(block, "potential")
    family = block.get("family")
    if family is None:
        raise ConfigError('missing required key "family" in "potential"')
    mirror = _boolean(block, "mirror", '"potential"', False)
    orient = block.get("orient", "auto")
    if orient not in ("auto", "keep"):
        raise ConfigError('"orient" in "potential" must be "auto" or "keep"')
    common = ("family", "mirror", "orient")
    if family == "biased_quartic":
        _check_keys(block, common + ("alpha", "a", "beta"), '"potential"')
        spec = BiasedQuartic(
            alpha=_number(block, "alpha", '"potential"'),
            a=_number(block, "a", '"potential"'),
            beta=_number(block, "beta", '"potential"', default=0.0),
        )
    elif family == "double_oscillator":
        _check_keys(
            block, common + ("omega_L", "omega_R", "tilde_eps", "V0"), '"potential"'
        )
        spec = DoubleOscillator(
            omega_L=_number(block, "omega_L", '"potential"'),
            omega_R=_number(block, "omega_R", '"potential"'),
            tilde_eps=_number(block, "tilde_eps", '"potential"'),
            V0=_number(block, "V0", '"potential"'),
        )
    elif family == "polynomial":
        _check_keys(block, common + ("coeffs", "window"), '"potential"')
        coeffs = block.get("coeffs")
        if not isinstance(coeffs, list) or not coeffs:
            raise ConfigError('"coeffs" in "potential" must be a non-empty array')
        vals = []
        for i, c in enumerate(coeffs):
            if isinstance(c, bool) or not isinstance(c, (int, float)):
                raise ConfigError(f'"coeffs[{i}]" in "potential" must be a number')
            if not math.isfinite(float(c)):
                raise ConfigError(f'"coeffs[{i}]" in "potential" must be finite')
            vals.append(float(c))
        window = block.get("window")
        if window is not None:
            if not (isinstance(window, list) and len(window) == 2):
                raise ConfigError('"window" in "potential" must be [lo, hi]')
            for i, w in enumerate(window):
                if isinstance(w, bool) or not isinstance(w, (int, float)):
                    raise ConfigError(f'"window[{i}]" in "potential" must be a number')
                if not math.isfinite(float(w)):
                    raise ConfigError(f'"window[{i}]" in "potential" must be finite')
            window = (float(window[0]), float(window[1]))
        spec = Polynomial(coeffs=tuple(vals), window=window)
    else:
        raise ConfigError(
            f'unknown potential family {family!r}; expected "biased_quartic", '
            '"double_oscillator", or "polynomial"'
        )
    if mirror:
        spec = Mirrored(spec)
    return spec, orient


def parse_config(document) -> RunConfig:
    """Validate a parsed JSON object (or JSON text) into a RunConfig."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document, parse_constant=_reject_nonfinite)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
    document = _as_mapping(document, "config")
    _check_keys(
        document,
        (
            "schema",
            "potential",
            "constants",
            "oracle_grid",
            "sweep",
            "tolerances",
            "validity_thresholds",
        ),
        "config",
    )
    schema = document.get("schema")
    if schema is None:
        raise ConfigError('missing required key "schema" (expected "tunnelkit/1")')
    if schema != SCHEMA:
        raise ConfigError(f'unsupported schema {schema!r}; expected "{SCHEMA}"')
    if "potential" not in document:
        raise ConfigError('missing required key "potential"')
    potential, orient = _parse_potential(document["potential"])

    constants = PhysConstants()
    if "constants" in document:
        block = _as_mapping(document["constants"], "constants")
        _check_keys(block, ("hbar", "mass"), '"constants"')
        constants = PhysConstants(
            hbar=_number(block, "hbar", '"constants"', default=1.0),
            mass=_number(block, "mass", '"constants"', default=1.0),
        )

    grid = None
    if "oracle_grid" in document:
        block = _as_mapping(document["oracle_grid"], "oracle_grid")
        _check_keys(
            block, ("x_min", "x_max", "n_points", "richardson"), '"oracle_grid"'
        )
        grid = GridSpec(
            x_min=_number(block, "x_min", '"oracle_grid"'),
            x_max=_number(block, "x_max", '"oracle_grid"'),
            n_points=_integer(block, "n_points", '"oracle_grid"', default=8001),
            richardson=_boolean(block, "richardson", '"oracle_grid"', True),
        )

    sweep = None
    if "sweep" in document:
        block = _as_mapping(document["sweep"], "sweep")
        _check_keys(block, ("parameter", "from", "to", "steps"), '"sweep"')
        parameter = block.get("parameter")
        if parameter is None:
            raise ConfigError('missing required key "parameter" in "sweep"')
        if parameter != "tilde_eps":
            raise ConfigError(
                f'sweep parameter must be "tilde_eps", got {parameter!r}'
            )
        steps = _integer(block, "steps", '"sweep"')
        if steps < 1:
            raise ConfigError('"steps" in "sweep" must be at least 1')
        sweep = SweepSpec(
            parameter=parameter,
            start=_number(block, "from", '"sweep"'),
            stop=_number(block, "to", '"sweep"'),
            steps=steps,
        )

    tolerances = Tolerances()
    if "tolerances" in document:
        block = _as_mapping(document["tolerances"], "tolerances")
        _check_keys(block, ("quad_rtol",), '"tolerances"')
        quad_rtol = _number(block, "quad_rtol", '"tolerances"', default=1e-12)
        if not 0.0 < quad_rtol <= 1e-3:
            raise ConfigError('"quad_rtol" must lie in (0, 1e-3]')
        tolerances = Tolerances(quad_rtol=quad_rtol)

    thresholds = ValidityThresholds()
    if "validity_thresholds" in document:
        block = _as_mapping(document["validity_thresholds"], "validity_thresholds")
        _check_keys(block, ("max_eps_over_hw", "max_gamow"), '"validity_thresholds"')
        max_eps = _number(
            block, "max_eps_over_hw", '"validity_thresholds"', default=0.2
        )
        max_gamow = _number(block, "max_gamow", '"validity_thresholds"', default=1e-2)
        if max_eps <= 0.0 or max_gamow <= 0.0:
            raise ConfigError("validity thresholds must be positive")
        thresholds = ValidityThresholds(max_eps_over_hw=max_eps, max_gamow=max_gamow)

    return RunConfig(
        potential=potential,
        orient=orient,
        constants=constants,
        oracle_grid=grid,
        sweep=sweep,
        tolerances=tolerances,
        validity_thresholds=thresholds,
    )


def load_config(path) -> RunConfig:
    """Read and validate a config file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return parse_config(text)
