"""
Solving by LEX bases and specialization
=======================================

Without field equations the F_5 system has infinitely many solutions over
the closure.  Adding them makes the ideal zero-dimensional; the LEX basis
then splits into univariate root finding and substitution.
"""

from solvdeg import LEX, buchberger, is_zero_dimensional, lex_solve, solving_degree
from solvdeg.solver import shape_interpolate, specialize_gb
from solvdeg.systems import add_field_equations, fixture_f5

I = fixture_f5()
J = add_field_equations(I)
print("I zero-dimensional:", is_zero_dimensional(I), " J:", is_zero_dimensional(J))
print("solvdeg LEX: I =", solving_degree(I, LEX), " J =", solving_degree(J, LEX))

G = list(buchberger(J, LEX))
print("LEX basis of J:", [str(g) for g in G])
print("specialized at x1 = 2:", [str(g) for g in specialize_gb(G, 2)])

points = lex_solve(J)
print("points (x3, x2, x1):", points)

# The x1 coordinates are pairwise distinct, so interpolation through the
# points rebuilds the same basis.
print("interpolated:", [str(g) for g in shape_interpolate(points, I.ring)])
