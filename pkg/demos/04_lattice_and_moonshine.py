"""Two more consequences: the h = 1 lattice case and the moonshine module.

Run: python3 demos/04_lattice_and_moonshine.py
"""
from griess.apps import lattice_case, matsuo_c_half
from griess.extgriess import check_axioms, free_fermion, root_analysis

rep = lattice_case()
print("moment 1:", rep.moment1, " moment 2:", rep.moment2)
print("first moment only:", [s.values for s in rep.eq1_solutions])
print("both moments:", [s.values for s in rep.solutions])
for s in rep.excluded:
    print("  excluded", s.values, "-", s.note)
print("rank:", rep.rank)

# c = 1/2 vectors on V_2 of the moonshine module
m = matsuo_c_half(24, 196884)
print("d0, d_1/2, d_1/16, tau:", m.d0, m.d_half, m.d_16, m.tau)

# square roots of idempotents in the extended Griess algebra
print("free fermion axioms:", check_axioms(free_fermion()).status)
for hh in ("1/2", "5/2"):
    r = root_analysis(hh)
    print(f"h = {hh}: c = {r.central_charge}, {r.label}")
