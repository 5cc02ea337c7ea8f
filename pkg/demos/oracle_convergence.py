"""Convergence study of the finite-difference eigensolver.

The three-point Laplacian converges at second order in the grid spacing
and approaches each eigenvalue from below.  Richardson extrapolation over
a half-spacing pair removes the leading error term.  The guard rails
(domain and resolution checks) are demonstrated at the end.
"""
import math

from tunnelkit import (
    BiasedQuartic,
    DEFAULT_CONSTANTS as C,
    DomainTooSmall,
    GridSpec,
    GridTooCoarse,
    Polynomial,
    eigen_lowest_two,
)

harmonic = Polynomial((0.0, 0.0, 0.5))

print("Harmonic ground state, raw grids (exact E0 = 1/2)")
errors = []
for n in (201, 401, 801, 1601):
    sp = eigen_lowest_two(harmonic, C, GridSpec(-8.0, 8.0, n, richardson=False))
    err = abs(sp.E0 - 0.5)
    errors.append(err)
    print(f"  n={n:5d}:  E0 = {sp.E0:.10f}   error = {err:.3e}")
orders = [math.log2(e0 / e1) for e0, e1 in zip(errors, errors[1:])]
print(f"  observed convergence orders: {[f'{o:.4f}' for o in orders]}")
print()

sp = eigen_lowest_two(harmonic, C, GridSpec(-8.0, 8.0, 2001, richardson=True))
print("With Richardson extrapolation at n=2001:")
print(f"  E0 = {sp.E0:.14f}   error = {abs(sp.E0 - 0.5):.2e}")
print(f"  reported error estimate (conservative): {sp.est_error:.2e}")
print()

print("Guard rails on a quartic double well (wells at -/+2.1)")
quartic = BiasedQuartic(1.0, 2.1)
try:
    eigen_lowest_two(quartic, C, GridSpec(-2.2, 2.2, 2001))
except DomainTooSmall as exc:
    print(f"  walls too close:  {exc}")
try:
    eigen_lowest_two(quartic, C, GridSpec(-5.5, 5.5, 101))
except GridTooCoarse as exc:
    print(f"  grid too coarse:  {exc}")

sp = eigen_lowest_two(quartic, C, GridSpec(-4.8, 4.8, 8001, richardson=True))
print(f"  adequate grid:    doublet splitting = {sp.splitting:.6e}")
