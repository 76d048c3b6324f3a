"""Gram matrices of the Virasoro vacuum module and the Casimir expansions.

Run: python3 demos/01_virasoro_and_casimir.py
"""
from griess.casimir import casimir_expansion, verify_appendix_a
from griess.virasoro import d_polynomial, gram_determinant, gram_matrix, partitions

# PBW basis at degree 6: partitions with parts >= 2 (L(-1) kills the vacuum)
print("basis of degree 6:", partitions(6))

# the Gram matrix is symmetric with entries in Q[c]
for row in gram_matrix(4):
    print("  ", [str(x) for x in row])
print("det at degree 4:", gram_determinant(4))

# D_{2t}(c) collects the zeros that matter up to degree 2t
for two_t in (2, 4, 6, 8, 10):
    print(f"D_{two_t}(c) =", d_polynomial(two_t))

# kappa_m in terms of L(-n)|0>; coefficients sit over D_{2[m/2]}(c)
exp = casimir_expansion(4)
print("A^(4) over", exp.denominator)
for parts, coef in exp.coeffs.items():
    print("  ", list(parts), coef)

# the full table check, m = 2..10
rows = verify_appendix_a()
print(sum(r.status == "PASS" for r in rows), "of", len(rows), "entries reproduced")
