"""The polynomials H_{2k}: small cases, special points and their zeta = 0 values.

Run: python demos/01_polynomials.py
"""
from susy8v.combinatorics import asm_count
from susy8v.exactpoly import serialize, var
from susy8v.rzpoly import J2, J3, J4, H_poly, H_two_var, mobius_residual

ws = [var(f"w{i}") for i in range(1, 5)]
print("H_4(w1..w4) =", serialize(H_poly(2, ws)))
print()

# Two arguments through the small determinant agree with the general routine.
for k in range(2, 5):
    same = H_poly(k, [J2, J3]) == H_two_var(k, J2, J3)
    print(f"k={k}: H(J2,J3) = {serialize(H_poly(k, [J2, J3]))}   two-argument formula agrees: {same}")
print()

# At zeta = 0 the special values count symmetry classes of alternating sign matrices.
print(" k   H|0   A_V(2k+1)   H(J3)|0   N8(2k)")
for k in range(1, 5):
    h0 = H_poly(k).eval_exact({"z": 0})
    h3 = H_poly(k, [J3]).eval_exact({"z": 0})
    print(f"{k:2d} {h0!s:>5} {asm_count('A_V', 2 * k + 1):>11} {h3!s:>9} {asm_count('N8', 2 * k):>8}")
print()

# zeta -> (zeta+3)/(zeta-1) rescales H by a power of 2/(zeta-1).
print("rescaling law holds for k = 1, 2:", all(mobius_residual(k, ws[: 2 * k]).is_zero() for k in (1, 2)))
print("H(J4) at k=3:", serialize(H_poly(3, [J4])))
