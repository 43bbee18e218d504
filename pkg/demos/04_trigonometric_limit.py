"""The limit zeta -> 0: refined enumerations and an unproved coefficient.

Run: python demos/04_trigonometric_limit.py
"""
from susy8v import scalars as sc
from susy8v.combinatorics import asm_count
from susy8v.exactpoly import serialize

for n in range(5):
    refined = [asm_count("A_refined", n + 1, k + 1) for k in range(n + 1)]
    print(f"n={n}: S at zeta=0 = {serialize(sc.S_predict(n, zeta=0)):<36} refined counts {refined}")
print()
for n in range(4):
    print(f"n={n}: Sbar+ at zeta=0 = {serialize(sc.Sbar_predict(n, zeta=0, sign=1))}")
print()

# Top coefficient of the almost-polarized component next to the Catalan numbers.
for n in range(6):
    comp = sc.component_predict(n, "almost_polarized")
    top = comp.coefficient("z", comp.degree("z"))
    print(f"n={n}: top coefficient {serialize(top):>4}   Catalan {asm_count('Catalan', n)}")
