"""Trace formulae for zero modes on the top level, derived by rewriting.

Run: python3 demos/02_trace_formulae.py
"""
from fractions import Fraction

from griess.traceform import (
    derive_trace_formula, evaluate_trace, formula_table, omega_saturation, pattern_label,
    reduce_pairing, reduction_check, specialize_virasoro, zhu_expand,
)

# one step of the rewriting engine: (a0_(4) a1_(1) a2_(0) a3 | vacuum)
word = (("a0", 4), ("a1", 1), ("a2", 0), ("a3", -1))
print("reduce:", reduce_pairing(word))

# the Zhu expansion behind tr o(a0)o(a1)o(a2)
for t in zhu_expand(3)[:4]:
    print("  indices", t.indices, "sign", t.sign, "weight", t.weight, "x", t.multiplicity)

# degrees 1..3 come from rewriting, 4 and 5 from the tables
for k in (1, 2, 3):
    tab = derive_trace_formula(k)
    print(f"degree {k} over {tab.denominator}")
    for pid, coef in tab.coeffs.items():
        print("  ", pattern_label(k, pid), "->", coef)

# consistency: all arguments omega gives h^k d, and a0 = omega/h drops a degree
print("omega saturation:", [omega_saturation(k) for k in range(1, 6)])
print("reduction:", [all(r.ok for r in reduction_check(k, tuple(range(k)))) for k in range(2, 6)])

# on a Virasoro vector e the formula collapses to a polynomial in kappa = (e|e)
print("E^(3):", {j: str(v)[:40] + "..." for j, v in specialize_virasoro(3).items()})

# evaluation at explicit numbers
at = {"c": Fraction(47, 2), "d": 4371, "h": Fraction(3, 2)}
vals = {"(e|ω)": Fraction(7, 20), "(e|e)": Fraction(7, 20), "(e|e|e)": Fraction(7, 10)}
print("tr o(e)^3 =", evaluate_trace(formula_table(3), vals, at, ["e"] * 3))
