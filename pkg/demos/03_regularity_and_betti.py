"""
Betti numbers, regularity and the Hilbert series
================================================

For monomial ideals the package computes the graded Betti numbers exactly.
For other homogeneous ideals the regularity goes through the DRL initial
ideal, and the report says whether the value is exact.
"""

from solvdeg import Ideal, PolyRing
from solvdeg.invariants import betti_table, hilbert_series, reg_via_initial

gens = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 3, 0)]  # x^2, xy, xz, y^3
table = betti_table(gens)
for (i, j), v in sorted(table.entries.items()):
    print(f"beta[{i},{j}] = {v}")
print("reg =", table.reg, " pd =", table.pd)

hs = hilbert_series(gens)
print("h =", hs.h, " ell =", hs.ell, " HF:", hs.expand(6))

# (x^p, y^p) over F_p is its own initial ideal; its regularity is 2p - 1.
for p in (2, 3, 5, 7):
    R = PolyRing(p, "x y")
    x, y = R.gens
    r = reg_via_initial(Ideal([x ** p, y ** p]))
    print(f"p={p}: reg = {r.value} ({r.label})")
