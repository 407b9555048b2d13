"""
A toy ABC instance over F_2
===========================

The eight quadrics come from the entries of A*B and A*C.  We compute the
reduced LEX basis, the solving degree, and the zero set.
"""

from solvdeg import DRL, LEX, buchberger, lex_solve, solving_degree
from solvdeg.systems import abc_bound, abc_fixture, format_system

I = abc_fixture()
print(format_system(I))

G = buchberger(I, LEX)
print("reduced LEX basis:")
for g in G:
    print("   ", g)

# The system is homogeneous, so the solving degree is the top basis degree.
print("solvdeg DRL:", solving_degree(I, DRL), " bound n+2:", abc_bound(I.ring.n))
print("points over F_2:", lex_solve(I))

# At cryptographic sizes only the bound itself can be evaluated.
for n in (32, 64, 128):
    print(f"n={n}: solving degree at most {abc_bound(n)}")
