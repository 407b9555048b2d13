"""
The solving degree of a small system and of its homogenizations
================================================================

Two conics over F_7.  The ideal, the ideal of homogenized generators and
the homogenized ideal each have their own solving degree; the loop below
prints them next to the degrees of their reduced bases.
"""

from solvdeg import DRL, verify_chain, xl_groebner
from solvdeg.homogenize import homogenized_ideal, tilde_ideal
from solvdeg.systems import parse_system

I = parse_system("""
field 7
vars x y
x^2 - 1
x*y + x
""")

for name, J in [("I", I), ("I~", tilde_ideal(I)), ("I^h", homogenized_ideal(I))]:
    G, report = xl_groebner(J, DRL)
    print(f"{name:4s} solvdeg = {report.solving_degree}   basis: {[str(g) for g in G]}")

# The trace shows where the degree fall happens: at d = 2 the rows give
# x*y + x and x^2 - 1, and the degree-3 rows expose y + 1.
_, report = xl_groebner(I, DRL)
for step in report.trace:
    print(f"  d={step.d} rows={step.rows} cols={step.cols} rank={step.rank} mutants={step.mutants}")

# All chain relations at once, with the hypotheses that license each one.
report = verify_chain(I)
for rel in report.relations:
    print(f"  {'ok ' if rel.ok else 'BAD'} {rel.name}{'' if rel.licensed else '  (not licensed)'}")
