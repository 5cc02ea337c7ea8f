"""Closed-form barrier actions versus adaptive quadrature.

The piecewise-parabolic double well admits an exact expression for the
barrier penetration integral, which makes it the calibration family for
the general-purpose quadrature.  This script evaluates both on a grid of
well shapes and prints the worst disagreement, then shows the action's
energy slope against a finite difference.
"""
import math

import numpy as np

from tunnelkit import (
    DEFAULT_CONSTANTS as C,
    DoubleOscillator,
    action_slope,
    analyze,
    double_oscillator_action,
    gamow_integral,
)

print("Closed form vs quadrature on 100 well shapes")
worst = 0.0
for v0 in np.linspace(8.0, 40.0, 5):
    for ratio in np.linspace(1.0, 2.0, 5):
        for te in np.linspace(0.0, 0.2, 4):
            spec = DoubleOscillator(1.0, ratio, te, v0)
            a = analyze(spec, C)
            i_l, i_r = double_oscillator_action(spec, C, a.E_bar)
            quad = gamow_integral(spec, C, a.E_bar, a)
            worst = max(worst, abs(quad - (i_l + i_r)) / (i_l + i_r))
print(f"  worst relative difference: {worst:.3e}")
print()

spec = DoubleOscillator(1.0, 1.4, 0.1, 8.0)
a = analyze(spec, C)
print(f"One well in detail: omega_L=1, omega_R=1.4, tilde_eps=0.1, V0=8")
print(f"  turning diagram: x_L={a.x_L:.4f}, barrier top at x={a.x_m:.1f}, x_R={a.x_R:.4f}")
for e in (0.5, 1.0, 2.0, 4.0):
    i = gamow_integral(spec, C, e, a)
    print(f"  I({e:.1f}) = {i:.6f}   exp(-I) = {math.exp(-i):.3e}")
print()

print("Action slope dI/dE against a central finite difference")
e = 1.3
h = 1e-5 * e
slope = action_slope(spec, C, e, a)
fd = (gamow_integral(spec, C, e + h, a) - gamow_integral(spec, C, e - h, a)) / (2 * h)
print(f"  analytic-by-parts slope: {slope:.12f}")
print(f"  finite difference:       {fd:.12f}")
print(f"  relative difference:     {abs(slope - fd) / abs(slope):.2e}")
print()
print(
    "The slope is negative: raising the energy thins the barrier.  Its\n"
    "magnitude controls both the bias sensitivity of the splitting and the\n"
    "quadratic level-shift term."
)
