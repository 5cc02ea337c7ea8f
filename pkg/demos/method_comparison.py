"""First-order correction versus the plain formula, judged by the eigensolver.

On wells with unequal frequencies the splitting formula carries a
correction factor linear in the bias.  This script builds ten tilted
sextic wells with a moderate barrier, computes the splitting with and
without the correction, and lets the finite-difference spectrum decide
which lands closer.  The correction shrinks the splitting, the right
direction here, so it should win every row.
"""
import numpy as np

from tunnelkit import DEFAULT_CONSTANTS as C, Polynomial, analyze, parse_config
from tunnelkit.cli import run_compare

Q1 = (0.69 / 2.69) * (0.8 + 0.2)
BASE = [0.8, Q1, -1.4, -2.0 * Q1, 0.4, Q1, 0.2]


def coeffs(scale, tilt=0.0):
    c = [scale * v for v in BASE]
    c[0] += tilt
    c[1] += tilt
    return c


shape = analyze(Polynomial(tuple(coeffs(1.0))), C)
scale = (1.5 * C.hbar * shape.omega_L / shape.V0) ** 2
base = analyze(Polynomial(tuple(coeffs(scale))), C)

print(f"Corpus: sextic at V0 = 1.5 hbar omega_L (scale {scale:.3f}), ten tilts")
print(f"{'tilt':>8}  {'zeroth err':>12}  {'first err':>12}  winner")

wins = 0
for tilt_frac in np.linspace(0.002, 0.05, 10):
    tilt = 0.5 * tilt_frac * C.hbar * base.omega_L
    config = parse_config(
        {
            "schema": "tunnelkit/1",
            "potential": {"family": "polynomial", "coeffs": coeffs(scale, tilt)},
            "oracle_grid": {
                "x_min": -3.0,
                "x_max": 3.0,
                "n_points": 6001,
                "richardson": True,
            },
        }
    )
    doc, _ = run_compare(config)
    by = {row["method"]: row["rel_err_vs_oracle"] for row in doc["methods"]}
    first_wins = by["first_order"] < by["zeroth_order"]
    wins += first_wins
    winner = "first_order" if first_wins else "zeroth_order"
    print(
        f"{tilt:8.4f}  {by['zeroth_order']:12.6e}  {by['first_order']:12.6e}  {winner}"
    )

print(f"\nfirst_order closer to the eigensolver in {wins} of 10 rows")
print(
    "\nBoth semiclassical numbers sit well above the exact splitting at this\n"
    "barrier depth (the relative errors above are the overshoot).  The\n"
    "correction factor is below one for these tilts, so applying it moves\n"
    "every row toward the reference value."
)
