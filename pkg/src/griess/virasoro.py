"""Quotient Verma module M(c,0)/M(c,1) of the Virasoro algebra.

A PBW monomial is a weakly decreasing tuple ``(p1, ..., pk)`` of parts
>= 2 standing for ``L(-p1)...L(-pk)|0>``.  Monomials containing a part 1
vanish in the quotient and are dropped as soon as they appear.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DegreeMismatch, DegreeUnderflow, UnsupportedDegree
from .exact import C, ONE, Poly, ZERO, determinant

DEGREE_CAP = 10


def partitions(m: int, smallest: int = 2):
    """Partitions of m into parts >= 2, lexicographically decreasing."""
    if m < 0:
        return []
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, cap), smallest - 1, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(m, m, [])
    return out


def fmt_partition(p) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


@dataclass(frozen=True)
class PBWVector:
    degree: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        for mono in self.coeffs:
            if sum(mono) != self.degree:
                raise DegreeMismatch(f"monomial {mono} has degree {sum(mono)}, not {self.degree}")

    @classmethod
    def vacuum(cls):
        return cls(0, {(): ONE})

    @classmethod
    def basis(cls, parts):
        parts = tuple(parts)
        return cls(sum(parts), {tuple(sorted(parts, reverse=True)): ONE})

    def vacuum_coefficient(self) -> Poly:
        return self.coeffs.get((), ZERO)

    def __add__(self, other):
        if self.degree != other.degree:
            raise DegreeMismatch("adding vectors of different degree")
        return PBWVector(self.degree, _add(self.coeffs, other.coeffs))

    def scale(self, k):
        return PBWVector(self.degree, {m: v * k for m, v in self.coeffs.items() if v * k})

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for mono in sorted(self.coeffs, reverse=True):
            word = "".join(f"L(-{p})" for p in mono)
            terms.append(f"({self.coeffs[mono]})*{word}|0>")
        return " + ".join(terms)


def _add(a: dict, b: dict, k=1) -> dict:
    out = dict(a)
    for m, v in b.items():
        nv = out.get(m, ZERO) + v * k
        if nv.is_zero():
            out.pop(m, None)
        else:
            out[m] = nv
    return out


@lru_cache(maxsize=None)
def _apply_mono(n: int, mono: tuple):
    """L(n) applied to one PBW monomial; returns {monomial: Poly}."""
    if n == 0:
        s = sum(mono)
        return {mono: Poly.const(s)} if s else {}
    if not mono:
        # L(n)|0> = 0 for n >= -1; L(-k)|0> is itself a basis vector for k >= 2
        return {(-n,): ONE} if n <= -2 else {}
    p1, rest = mono[0], mono[1:]
    if n > 0:
        # L(n)L(-p1)X = L(-p1)L(n)X + (n+p1)L(n-p1)X + central term
        out = {}
        for m, v in _apply_mono(n, rest).items():
            out = _add(out, _prepend(p1, m, v))
        if n != p1:
            out = _add(out, _apply_mono(n - p1, rest), n + p1)
        else:
            # 2n L(0) X + c (n^3 - n)/12 X
            out = _add(out, {rest: Poly.const(2 * n * sum(rest)) + C * Fraction(n ** 3 - n, 12)})
        return out
    k = -n
    if k >= p1:
        return {(k,) + mono: ONE} if k >= 2 else {}
    # L(-k)L(-p1)X = L(-p1)L(-k)X + (p1-k)L(-k-p1)X with k < p1
    out = {}
    for m, v in _apply_mono(n, rest).items():
        out = _add(out, _prepend(p1, m, v))
    out = _add(out, _apply_mono(-(k + p1), rest), p1 - k)
    return out


def _prepend(p, mono, coef):
    """L(-p) applied to a PBW monomial (with coefficient)."""
    return {m: v * coef for m, v in _apply_mono(-p, mono).items()}


def apply_mode(n: int, v: PBWVector) -> PBWVector:
    """L(n) v for any integer n, re-normal-ordered in the quotient."""
    out = {}
    for mono, coef in v.coeffs.items():
        for m, w in _apply_mono(n, mono).items():
            out = _add(out, {m: w * coef})
    return PBWVector(v.degree - n, out)


def apply_raising(n: int, v: PBWVector) -> PBWVector:
    if n <= 0:
        raise ValueError("raising operators need n > 0")
    if n > v.degree:
        raise DegreeUnderflow(f"L({n}) applied to a vector of degree {v.degree}")
    return apply_mode(n, v)


def vacuum_mode_word(word) -> Poly:
    """Vacuum coefficient of L(j1)...L(jr)|0> (rightmost mode acts first)."""
    if sum(word) != 0:
        raise DegreeMismatch(f"word {list(word)} ends at degree {-sum(word)}, not 0")
    v = PBWVector.vacuum()
    for j in reversed(word):
        v = apply_mode(j, v)
    return v.vacuum_coefficient()


def check_degree(m: int, cap: int = DEGREE_CAP):
    if m < 0 or m > cap:
        raise UnsupportedDegree(f"degree {m} outside 0..{cap}")


def gram_entry(mu, nu) -> Poly:
    """<L(-mu)|0>, L(-nu)|0>>: vacuum coefficient of L(mu_k)...L(mu_1)L(-nu)|0>."""
    v = PBWVector.basis(nu) if nu else PBWVector.vacuum()
    for p in mu:
        v = apply_mode(p, v)
    return v.vacuum_coefficient()


@lru_cache(maxsize=None)
def _gram(m: int):
    parts = partitions(m)
    return tuple(tuple(gram_entry(mu, nu) for nu in parts) for mu in parts)


def gram_matrix(m: int, cap: int = DEGREE_CAP):
    check_degree(m, cap)
    return [list(row) for row in _gram(m)]


_D_FACTORS = {
    2: ["c"],
    4: ["c", "5*c+22"],
    6: ["c", "5*c+22", "2*c-1", "7*c+68"],
    8: ["c", "5*c+22", "2*c-1", "7*c+68", "3*c+46", "5*c+3"],
    10: ["c", "5*c+22", "2*c-1", "7*c+68", "3*c+46", "5*c+3", "11*c+232"],
}


def d_factors(two_t: int):
    """Linear factors of D_{2t}(c) as Polys."""
    if two_t not in _D_FACTORS:
        raise UnsupportedDegree(f"D_{two_t} is defined only for 2,4,6,8,10")
    return [Poly.parse(f) for f in _D_FACTORS[two_t]]


def d_polynomial(two_t: int) -> Poly:
    out = ONE
    for f in d_factors(two_t):
        out = out * f
    return out


def gram_determinant(m: int) -> Poly:
    return determinant(gram_matrix(m))
