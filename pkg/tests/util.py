"""Shared builders used across the test modules."""
import math

from tunnelkit import DEFAULT_CONSTANTS, Polynomial, analyze

# Linear coefficient that pins the well-frequency ratio of the pinned sextic
# (minima at x = -1 and x = +1) to exactly 1.3 while keeping both minima at
# zero depth offset.  With q0 = 0.8 and q2 = 0.2 the curvature ratio at the
# two minima is (q0 + q2 + q1) / (q0 + q2 - q1), so q1 = (0.69 / 2.69)(q0 + q2)
# gives omega_R / omega_L = sqrt(1.69) = 1.3.
SEXTIC_Q1 = (0.69 / 2.69) * (0.8 + 0.2)

# Ascending coefficients of (x^2 - 1)^2 (q2 x^2 + q1 x + q0).
SEXTIC_BASE = (
    0.8,
    SEXTIC_Q1,
    -1.4,
    -2.0 * SEXTIC_Q1,
    0.4,
    SEXTIC_Q1,
    0.2,
)


def sextic_coeffs(scale, tilt=0.0):
    """Scaled asymmetric sextic, optionally tilted by adding tilt*(x + 1)."""
    coeffs = [scale * c for c in SEXTIC_BASE]
    coeffs[0] += tilt
    coeffs[1] += tilt
    return coeffs


def sextic_scale_for_depth(depth_over_hw):
    """Overall scale making V0 / (hbar omega_L) equal depth_over_hw.

    Both V0 and omega_L**2 scale linearly with the overall factor, so the
    depth ratio grows as sqrt(scale) and the required scale is exact.
    """
    base = analyze(Polynomial(tuple(sextic_coeffs(1.0))), DEFAULT_CONSTANTS)
    hbar = DEFAULT_CONSTANTS.hbar
    return (depth_over_hw * hbar * base.omega_L / base.V0) ** 2


def rel_diff(a, b):
    return abs(a - b) / max(abs(a), abs(b))


def central_diff(fn, x, h):
    return (fn(x + h) - fn(x - h)) / (2.0 * h)


def is_monotone(seq, direction):
    pairs = zip(seq, seq[1:])
    if direction == "up":
        return all(b > a for a, b in pairs)
    return all(b < a for a, b in pairs)


assert math.isclose(SEXTIC_Q1, 0.25650557620817843, rel_tol=0, abs_tol=0)
