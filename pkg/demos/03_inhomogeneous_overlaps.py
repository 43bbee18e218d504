"""Overlaps of the inhomogeneous eigenvector with boundary states.

Null-space vectors carry no canonical scale, so the determinant formulas are
tested through ratios in which that scale cancels: the same vector paired
with boundary states at two values of lambda.

Run: python demos/03_inhomogeneous_overlaps.py
"""
import numpy as np

from susy8v import scalars as sc
from susy8v.eigensolver import solve_psi
from susy8v.theta import ThetaParams
from susy8v.tsuchiya import beta_points, random_points

rng = np.random.default_rng(1)
P = ThetaParams(0.25)
lam1, lam2 = 0.37 + 0.11j, 1.13 - 0.05j
Q1, Q2 = P.with_lambda(lam1), P.with_lambda(lam2)

for n in (1, 2, 3):
    xs = random_points(rng, n, P)
    psi = solve_psi(n, sc.psi_arguments(xs), P)
    measured = sc.Z_measure(n, xs, Q1, psi) / sc.Z_measure(n, xs, Q2, psi)
    predicted = sc.Y_predict(n, xs, Q1) / sc.Y_predict(n, xs, Q2)
    print(f"n={n}: measured ratio {measured:.12f}  predicted {predicted:.12f}  rel. diff {abs(measured / predicted - 1):.1e}")

# The overlap vanishes when x_1 hits one of the special points.
b = beta_points(Q1)
xs = random_points(rng, 2, P)
for label, x1 in (("generic", xs[0]), ("beta_1", b[1]), ("-beta_3", -b[3])):
    ys = [x1, xs[1]]
    v = solve_psi(2, sc.psi_arguments(ys), Q1).state
    vec = sc.xi_vector(ys, Q1)
    print(f"x_1 = {label:<8} |<xi|psi>| / |xi| = {abs(vec @ v) / np.linalg.norm(vec):.2e}")
