"""
Determinantal ideals and a dense cubic experiment
=================================================

Maximal minors of generic linear matrices reach a basis at degree r.  For
dense cubic triples in two variables the degree of regularity of the top
parts is 4; the solving degree depends on whether degree-fall rows are
reused.
"""

from solvdeg.chain import cubic_gap_record
from solvdeg.minrank import gen_instance, minrank_experiment

for r, s in ((2, 3), (3, 4)):
    M = gen_instance("generic-linear", r, s, 3, 101, seed=0)
    print(M.to_text())
    print(minrank_experiment(M, seed=0))

print("seed dregF solvdeg solvdeg(no mutants) reg(I~)")
for seed in range(5):
    rec = cubic_gap_record(seed)
    print(f"{seed:4d} {rec['dregF']:5d} {rec['solvdeg']:7d} {rec['solvdeg_no_mutants']:19d} {rec['reg_tilde']:7d}")
