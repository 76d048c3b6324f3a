"""The c = 7/10 Virasoro vector on the top level of the Baby-monster SVOA.

Inputs are only (c, h, d, c_e) = (47/2, 3/2, 4371, 7/10).
Run: python3 demos/03_baby_monster.py
"""
from fractions import Fraction

from griess.apps import (
    BM_EIGENVALUES, MultiplicityProblem, assign_eigenvalues, design6_classification,
    sigma_trace, solve_multiplicities, virasoro_moments,
)
from griess.extgriess import minimal_series

c, h, d, c_e = Fraction(47, 2), Fraction(3, 2), 4371, Fraction(7, 10)

moments = virasoro_moments(c, h, d, c_e / 2, 3)
print("tr o(e)^t, t = 1..3:", [str(m) for m in moments])

# eigenvalues of o(e) must be c = 7/10 minimal-series weights
weights = minimal_series(4, 5).weight_set()
print("allowed:", [str(w) for w in weights])
for sol in assign_eigenvalues(weights, [1, 1938, 2432], moments):
    print("eigenvalues for dims (1, 1938, 2432):", ", ".join(str(x) for x in sol))

# or solve for the multiplicities directly over four candidate eigenvalues
sol = solve_multiplicities(MultiplicityProblem(BM_EIGENVALUES, [d] + moments))
for lam, m in sol.values.items():
    print(f"  d_{lam} = {m}")
print("tr sigma =", sigma_trace(sol.values))

# which (c, d) allow a 6-design with d_{3/5} = 0 and d_{3/2} = 1
res = design6_classification()
print("closed forms match:", res.matches_printed)
for cand in res.candidates:
    print("  c =", cand[0], "d =", cand[1], "->", cand[3])
