"""Casimir vectors expanded in the PBW basis of the Virasoro quotient module.

The pairing of kappa_m with a PBW vector only needs the scalar recursion
L(n) kappa_m = (h(n-1) + m - n) kappa_{m-n}, with kappa_0 = d|0> and
kappa_1 = 0.  Solving against the Gram matrix gives the coefficients, and
multiplying by D_{2[m/2]}(c) must clear every denominator.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .data import appendix_a
from .errors import DegreeMismatch, NotDivisible, SingularGram, SingularMatrix
from .exact import C, D, H, ONE, Poly, RatFunc, ZERO, bareiss_solve
from .virasoro import DEGREE_CAP, check_degree, d_polynomial, fmt_partition, gram_matrix, partitions


@dataclass
class CasimirExpansion:
    m: int
    denominator: Poly
    coeffs: dict = field(default_factory=dict)

    def coefficient(self, parts) -> Poly:
        return self.coeffs.get(tuple(parts), ZERO)

    def as_rational(self):
        """{partition: RatFunc} with the denominator divided out."""
        return {p: RatFunc(v, self.denominator) for p, v in self.coeffs.items()}

    def to_record(self):
        return {
            "m": self.m,
            "denominator": str(self.denominator),
            "coefficients": {fmt_partition(p): str(v) for p, v in self.coeffs.items()},
        }


def denominator_for(m: int) -> Poly:
    return ONE if m < 2 else d_polynomial(2 * (m // 2))


def kappa_pairing(parts, m: int) -> Poly:
    """(L(-n1)...L(-nk)|0> | kappa_m) via the scalar recursion."""
    parts = tuple(parts)
    if sum(parts) != m:
        raise DegreeMismatch(f"{fmt_partition(parts)} is not a partition of {m}")
    value = D
    running = m
    for n in parts:
        value = value * (H * (n - 1) + (running - n))
        running -= n
        if running == 1:
            return ZERO
    return value


@lru_cache(maxsize=None)
def _expansion(m: int):
    parts = partitions(m)
    gram = gram_matrix(m)
    rhs = [kappa_pairing(p, m) for p in parts]
    try:
        nums, det = bareiss_solve(gram, rhs)
    except SingularMatrix as exc:
        raise SingularGram(f"Gram matrix of degree {m} is singular") from exc
    den = denominator_for(m)
    coeffs = {}
    for p, num in zip(parts, nums):
        try:
            coef = (num * den).divexact(det)
        except NotDivisible as exc:
            raise NotDivisible(f"A^({m}){fmt_partition(p)} is not a polynomial") from exc
        if not coef.is_zero():
            coeffs[p] = coef
    return den, coeffs


def casimir_expansion(m: int, cap: int = DEGREE_CAP) -> CasimirExpansion:
    if m == 0:
        return CasimirExpansion(0, ONE, {(): D})
    if m == 1:
        return CasimirExpansion(1, ONE, {})
    check_degree(m, cap)
    den, coeffs = _expansion(m)
    return CasimirExpansion(m, den, dict(coeffs))


def casimir_at(m: int, c) -> dict:
    """Coefficients with c specialised; raises SingularGram on a zero of D."""
    exp = casimir_expansion(m)
    den = exp.denominator.subs(c=c)
    if den.is_zero():
        raise SingularGram(f"c = {c} is a zero of D_{2 * (m // 2)}(c)")
    return {p: RatFunc(v.subs(c=c), den) for p, v in exp.coeffs.items()}


@dataclass
class EntryCheck:
    m: int
    parts: tuple
    status: str
    expected: str
    derived: str

    @property
    def label(self):
        return f"A^({self.m}){fmt_partition(self.parts)}"


def verify_appendix_a(max_m: int = DEGREE_CAP, table=None):
    """Compare every derived A^(m) entry with the embedded table."""
    table = appendix_a() if table is None else table
    report = []
    for m in range(2, max_m + 1):
        exp = casimir_expansion(m)
        for p in partitions(m):
            want = table.get((m, p))
            got = exp.coefficient(p)
            ok = want is not None and want == got
            report.append(EntryCheck(m, p, "PASS" if ok else "FAIL",
                                     "<missing>" if want is None else str(want), str(got)))
    return report


def design_residual(m: int):
    """Gram * (A/D) - pairing, which must vanish identically."""
    exp = casimir_expansion(m)
    parts = partitions(m)
    gram = gram_matrix(m)
    out = []
    for i, mu in enumerate(parts):
        acc = ZERO
        for j, nu in enumerate(parts):
            acc = acc + gram[i][j] * exp.coefficient(nu)
        out.append(acc - kappa_pairing(mu, m) * exp.denominator)
    return out


__all__ = [
    "CasimirExpansion", "casimir_expansion", "casimir_at", "kappa_pairing",
    "verify_appendix_a", "design_residual", "denominator_for", "C",
]
