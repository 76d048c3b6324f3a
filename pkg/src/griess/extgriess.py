"""Z2-extended Griess algebras V_2 + V_h, square roots of idempotents and
the Virasoro minimal series.

An extended Griess algebra is kept as a finite table of structure
constants; elements are dicts mapping basis labels to Fractions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import NonHalfInteger, NotCoprime, ParseError, UnsupportedTopWeight
from .exact import as_fraction


def epsilon(h) -> int:
    """Signature of the odd form: (-1)^h for integral h, +1 for h in Z+1/2."""
    h = as_fraction(h)
    if (2 * h).denominator != 1:
        raise NonHalfInteger(f"top weight {h} is not a half-integer")
    if h.denominator == 1:
        return -1 if h.numerator % 2 else 1
    return 1


# -- linear combinations ------------------------------------------------------

def lc_add(a: dict, b: dict, k=1) -> dict:
    out = dict(a)
    for x, v in b.items():
        nv = out.get(x, 0) + k * v
        if nv:
            out[x] = Fraction(nv)
        else:
            out.pop(x, None)
    return out


def lc_scale(a: dict, k) -> dict:
    return {x: Fraction(v * k) for x, v in a.items() if v * k}


def parse_lincomb(text: str) -> dict:
    """``2*e + 1/2*x - y`` style combinations of labels."""
    out = {}
    text = text.replace("-", "+-").strip()
    for term in filter(None, (t.strip() for t in text.split("+"))):
        if "*" in term:
            coef, label = term.rsplit("*", 1)
            coef = coef.strip()
            coef = Fraction(-1) if coef == "-" else Fraction(coef)
        elif term.startswith("-"):
            coef, label = Fraction(-1), term[1:]
        else:
            coef, label = Fraction(1), term
        label = label.strip()
        if label == "0":
            continue
        out = lc_add(out, {label: coef})
    return out


@dataclass
class ExtendedGriessAlgebra:
    even: list = field(default_factory=list)
    odd: list = field(default_factory=list)
    products: dict = field(default_factory=dict)   # (x, y) -> lincomb
    forms: dict = field(default_factory=dict)      # (x, y) -> Fraction
    top_weight: Fraction = Fraction(2)
    omega: dict = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> "ExtendedGriessAlgebra":
        alg = cls()
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, rest = line.partition(" ")
            rest = rest.strip()
            try:
                if key == "EVEN":
                    alg.even.append(rest)
                elif key == "ODD":
                    alg.odd.append(rest)
                elif key == "PROD":
                    lhs, rhs = rest.split("->")
                    x, y = lhs.split()
                    alg.products[(x, y)] = parse_lincomb(rhs)
                elif key == "FORM":
                    x, y, v = rest.split()
                    alg.forms[(x, y)] = Fraction(v)
                elif key == "TOPWEIGHT":
                    alg.top_weight = Fraction(rest)
                elif key == "OMEGA":
                    alg.omega = parse_lincomb(rest)
                else:
                    raise ParseError(f"line {lineno}: unknown keyword {key!r}")
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
        return alg

    @property
    def basis(self):
        return list(self.even) + list(self.odd)

    def is_odd(self, x):
        return x in self.odd

    def raw_product(self, x, y) -> dict:
        """Product as tabulated, without symmetrising (used by the axiom check)."""
        if (x, y) in self.products:
            return self.products[(x, y)]
        return self.products.get((y, x), {})

    def mul(self, u: dict, v: dict) -> dict:
        out = {}
        for x, a in u.items():
            for y, b in v.items():
                out = lc_add(out, self.raw_product(x, y), a * b)
        return out

    def form_basis(self, x, y) -> Fraction:
        if (x, y) in self.forms:
            return self.forms[(x, y)]
        return self.forms.get((y, x), Fraction(0))

    def form(self, u: dict, v: dict) -> Fraction:
        return sum((a * b * self.form_basis(x, y) for x, a in u.items() for y, b in v.items()),
                   Fraction(0))


@dataclass
class AxiomReport:
    violations: list

    @property
    def ok(self):
        return not self.violations

    @property
    def status(self):
        return "PASS" if self.ok else "FAIL"


def check_axioms(alg: ExtendedGriessAlgebra) -> AxiomReport:
    bad = []
    basis = alg.basis
    h = alg.top_weight
    eps = epsilon(h)
    for x in basis:
        for y in basis:
            if (x, y) in alg.products and (y, x) in alg.products and alg.products[(x, y)] != alg.products[(y, x)]:
                bad.append(f"commutativity: {x}*{y} != {y}*{x}")
            if alg.is_odd(x) != alg.is_odd(y) and alg.form_basis(x, y) != 0:
                bad.append(f"parity: ({x}|{y}) must vanish")
            if (x, y) in alg.forms and (y, x) in alg.forms and alg.forms[(x, y)] != alg.forms[(y, x)]:
                bad.append(f"symmetry: ({x}|{y}) != ({y}|{x})")
    if alg.omega:
        for x in basis:
            want = lc_scale({x: 1}, h if alg.is_odd(x) else 2)
            got = alg.mul(alg.omega, {x: 1})
            if got != want:
                bad.append(f"conformal: omega*{x} != {'h' if alg.is_odd(x) else '2'}*{x}")
    for m in basis:
        sign = eps if alg.is_odd(m) else 1
        for x in basis:
            for y in basis:
                lhs = alg.form(alg.mul({x: 1}, {m: 1}), {y: 1})
                rhs = alg.form({x: 1}, alg.mul({m: 1}, {y: 1}))
                if lhs != sign * rhs:
                    bad.append(f"invariance: ({x}{m}|{y}) = {lhs} but {sign}*({x}|{m}{y}) = {sign * rhs}")
    return AxiomReport(bad)


FREE_FERMION = """\
# c = 1/2 free fermion: a = e/2 idempotent, x a square root of a
TOPWEIGHT 1/2
EVEN e
ODD x
PROD e e -> 2*e
PROD e x -> 1/2*x
PROD x x -> 1/2*e
FORM e e 1/4
FORM x x 1/4
OMEGA e
"""

VIRASORO_ONLY = """\
TOPWEIGHT 2
EVEN w
PROD w w -> 2*w
FORM w w {half_c}
OMEGA w
"""


def free_fermion(norm_x=Fraction(1, 4)) -> ExtendedGriessAlgebra:
    alg = ExtendedGriessAlgebra.parse(FREE_FERMION)
    alg.forms[("x", "x")] = Fraction(norm_x)
    return alg


def virasoro_algebra(c) -> ExtendedGriessAlgebra:
    return ExtendedGriessAlgebra.parse(VIRASORO_ONLY.format(half_c=as_fraction(c) / 2))


# -- square roots of idempotents ------------------------------------------------

@dataclass
class RootAnalysis:
    h: Fraction
    norm_x: Fraction | None
    central_charge: Fraction
    label: str
    norm_a: Fraction | None = None
    consistent: bool = True
    notes: list = field(default_factory=list)
    brackets: dict = field(default_factory=dict)

    def to_record(self):
        fmt = lambda v: None if v is None else _fmt(v)
        return {
            "h": _fmt(self.h),
            "norm_x": fmt(self.norm_x),
            "norm_a": fmt(self.norm_a),
            "c": _fmt(self.central_charge),
            "label": self.label,
            "consistent": self.consistent,
            "notes": list(self.notes),
            "brackets": dict(self.brackets),
        }


def _fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def root_analysis(h, norm_a=None) -> RootAnalysis:
    h = as_fraction(h)
    if h == Fraction(1, 2):
        forced = Fraction(1, 16)
        rec = RootAnalysis(h, Fraction(1, 4), Fraction(1, 2), "L(1/2,0)+L(1/2,1/2)", forced)
        # 4(x|x) = 1 from aa = a; c(2a) = 8(a|a) = 8(x|x)^2 * 4 = 1/2
        if norm_a is not None and as_fraction(norm_a) != forced:
            rec.consistent = False
            rec.notes.append(f"(a|a) = {_fmt(norm_a)} given, but h = 1/2 forces (a|a) = 1/16")
        return rec
    if h == Fraction(3, 2):
        if norm_a is None or as_fraction(norm_a) <= 0:
            raise ValueError("h = 3/2 needs a positive (a|a)")
        t = as_fraction(norm_a)
        rec = RootAnalysis(h, Fraction(4, 3) * t, 8 * t, f"N=1 NS Virasoro SVOA, c = {_fmt(8 * t)}", t)
        rec.brackets = {
            "[L(m),G(r)]": "(m-2*r)/2 * G(m+r)",
            "[G(r),G(s)]+": "2*L(r+s) + delta(r+s,0)*(4*r^2-1)/12*c_a",
        }
        return rec
    if h == Fraction(5, 2):
        rec = RootAnalysis(h, None, Fraction(-13, 14), "L(-13/14,0)+L(-13/14,5/2)")
        rec.notes.append("assumes x_(n)x lies in <a> for n >= 0 and 2a is the conformal vector of <x>")
        return rec
    raise UnsupportedTopWeight(f"square-root analysis is available for h = 1/2, 3/2, 5/2, not {_fmt(h)}")


# -- Neveu-Schwarz check --------------------------------------------------------

@dataclass
class BracketReport:
    checked: int
    failures: list

    @property
    def ok(self):
        return not self.failures


def _ns_central(r):
    return (4 * r * r - 1) / Fraction(12)


def ns_bracket_check(c_a, bound: int = 6, central=None) -> BracketReport:
    """Compare the mode brackets of a and x (h = 3/2) with the NS relations.

    Modes follow from the extended algebra data a*x = (3/4)x,
    2a_(0)x = L(-1)x, x_(0)x = a, x_(2)x = (x|x)|0> with 3(x|x) = 4(a|a).
    ``central`` replaces the NS central coefficient (fault injection)."""
    c_a = as_fraction(c_a)
    if c_a == 0:
        raise ValueError("c_a must be nonzero")
    central = central or _ns_central
    norm_a = c_a / 8
    norm_x = Fraction(4, 3) * norm_a
    ax = Fraction(3, 4)  # a_(1)x = (h/2) x
    failures = []
    count = 0
    halves = sorted((Fraction(2 * k + 1, 2) for k in range(-bound, bound)), key=lambda r: (abs(r), r < 0))

    for m in range(-bound, bound + 1):
        for r in halves:
            # [2a_(M), x_(N)] = (2a_(0)x)_(M+N) + M (2a_(1)x)_(M+N-1), with (L(-1)x)_(k) = -k x_(k-1)
            big_m, big_n = m + 1, r + Fraction(1, 2)
            coef_x = -(big_m + big_n) + big_m * 2 * ax       # coefficient of x_(M+N-1)
            lhs = {("G", m + r): coef_x}                       # [L, 2x] = 2 coef x = coef G
            rhs = {("G", m + r): Fraction(m - 2 * r, 2)}
            count += 1
            if _clean(lhs) != _clean(rhs):
                failures.append(f"[L({m}),G({_fmt(r)})]")
    for r in halves:
        for s in halves:
            p, q = r + Fraction(1, 2), s + Fraction(1, 2)
            # [x_(p), x_(q)]_+ = (x_(0)x)_(p+q) + C(p,2)(x_(2)x)_(p+q-2)
            lhs = {("L", r + s): Fraction(2)}                   # 4 a_(p+q) = 2 L(r+s)
            if p + q == 1:
                lhs[("1",)] = 4 * p * (p - 1) / 2 * norm_x
            rhs = {("L", r + s): Fraction(2)}
            if r + s == 0:
                rhs[("1",)] = central(r) * c_a
            count += 1
            if _clean(lhs) != _clean(rhs):
                failures.append(f"[G({_fmt(r)}),G({_fmt(s)})]+")
    return BracketReport(count, failures)


def _clean(d):
    return {k: v for k, v in d.items() if v}


# -- minimal series ---------------------------------------------------------

@dataclass
class MinimalSeriesEntry:
    p: int
    q: int
    c: Fraction
    weights: dict

    def weight_set(self):
        return sorted(set(self.weights.values()))

    def to_record(self):
        return {
            "p": self.p, "q": self.q, "c": _fmt(self.c),
            "weights": [_fmt(w) for w in self.weight_set()],
            "table": {f"{r},{s}": _fmt(w) for (r, s), w in sorted(self.weights.items())},
        }


def minimal_series(p: int, q: int) -> MinimalSeriesEntry:
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise NotCoprime(f"(p, q) = ({p}, {q}) must be coprime integers >= 2")
    c = 1 - Fraction(6 * (p - q) ** 2, p * q)
    weights = {
        (r, s): Fraction((r * q - s * p) ** 2 - (p - q) ** 2, 4 * p * q)
        for r in range(1, p) for s in range(1, q)
    }
    return MinimalSeriesEntry(p, q, c, weights)
