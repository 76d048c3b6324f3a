"""Applications of the trace formulae: moments of Virasoro vectors,
eigenvalue and multiplicity solving, sigma traces and design classification.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from .data import appendix_b
from .errors import (
    DimensionMismatch, MissingSign, NoSolution, SingularSystem, UnboundedSearch, ZeroDenominator,
)
from .exact import C, D, H, Poly, RatFunc, _subs_any, as_fraction, linsolve, rational_roots
from .extgriess import minimal_series
from .virasoro import d_factors, d_polynomial


# -- moments ------------------------------------------------------------------

def _is_symbolic(v):
    return isinstance(v, (Poly, RatFunc))


def _coerce_value(v):
    if _is_symbolic(v):
        return v
    if isinstance(v, str) and any(ch in v for ch in "cdh"):
        return Poly.parse(v)
    return as_fraction(v)


def _e_row(t: int) -> dict:
    """{j: E^(t)_j} for the trace of o(e)^t, including the closed forms for t = 1, 2."""
    if t == 1:
        return {1: 2 * H * D}
    if t == 2:
        return {2: 4 * H * D * (5 * H + 1), 1: 2 * H * D * (22 * H - C)}
    return appendix_b()[1][t]


def virasoro_moments(c, h, d, e_norm, t_max: int):
    """[tr o(e)^t for t = 1..t_max]; exact Fractions, or RatFuncs when an input is symbolic."""
    if not 1 <= t_max <= 5:
        raise ValueError("t_max must lie in 1..5")
    c, h, d, kappa = (_coerce_value(v) for v in (c, h, d, e_norm))
    out = []
    for t in range(1, t_max + 1):
        for f in d_factors(2 * t):
            val = f.subs(c=c) if _is_symbolic(c) else f.eval({"c": c, "d": 0, "h": 0})
            if (val.is_zero() if _is_symbolic(val) else val == 0):
                raise ZeroDenominator(f"D_{2 * t}(c) vanishes: factor ({f}) is zero at c = {c}")
        num = RatFunc(0)
        for j, e in _e_row(t).items():
            num = num + RatFunc.coerce(_subs(e, c, d, h)) * RatFunc.coerce(kappa) ** j
        den = RatFunc.coerce(_subs(d_polynomial(2 * t), c, d, h))
        out.append(_collapse(num / den))
    return out


def _collapse(r: RatFunc):
    """A Fraction when r is constant, else r itself."""
    if r.num.is_constant() and r.den.is_constant():
        return r.num.constant_value() / r.den.constant_value()
    return r


def _subs(p: Poly, c, d, h):
    vals = {"c": c, "d": d, "h": h}
    if not any(_is_symbolic(v) for v in vals.values()):
        return p.eval(vals)
    return _subs_any(p, {k: RatFunc.coerce(v) if _is_symbolic(v) else v for k, v in vals.items()})


# -- multiplicities ---------------------------------------------------------------

@dataclass
class MultiplicityProblem:
    eigenvalues: list
    moments: list           # moments[j] = tr o(e)^j, moments[0] = total dimension
    total: object = None

    def __post_init__(self):
        self.eigenvalues = [as_fraction(x) for x in self.eigenvalues]
        self.moments = [m if _is_symbolic(m) else as_fraction(m) for m in self.moments]


@dataclass
class MultiplicitySolution:
    values: dict
    integral: bool
    nonnegative: bool

    def to_record(self):
        return {
            "multiplicities": {_fmt(k): _fmt(v) for k, v in self.values.items()},
            "integral": self.integral,
            "nonnegative": self.nonnegative,
        }


def _fmt(q):
    if isinstance(q, (Poly, RatFunc)):
        return str(q)
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def power(x, j):
    """x^j with 0^0 = 1."""
    return Fraction(1) if j == 0 else Fraction(x) ** j


def solve_multiplicities(problem: MultiplicityProblem) -> MultiplicitySolution:
    lam = problem.eigenvalues
    if len(set(lam)) != len(lam):
        raise SingularSystem("eigenvalues must be distinct")
    if len(problem.moments) != len(lam):
        raise DimensionMismatch(f"{len(lam)} eigenvalues need {len(lam)} moments, got {len(problem.moments)}")
    matrix = [[power(x, j) for x in lam] for j in range(len(lam))]
    sol = linsolve(matrix, problem.moments)
    values = {x: _collapse(v) for x, v in zip(lam, sol)}
    numeric = [v for v in values.values() if isinstance(v, Fraction)]
    return MultiplicitySolution(
        values,
        all(v.denominator == 1 for v in numeric) and len(numeric) == len(values),
        all(v >= 0 for v in numeric),
    )


def moments_from_multiplicities(multiplicities: dict, j_max: int):
    return [sum((power(x, j) * m for x, m in multiplicities.items()), Fraction(0)) for j in range(j_max + 1)]


def assign_eigenvalues(allowed, multiplicities, moments):
    """All injective assignments of allowed eigenvalues to the multiplicity slots
    reproducing moments[0..] = tr o(e)^1, tr o(e)^2, ..."""
    allowed = sorted({as_fraction(x) for x in allowed})
    mults = [as_fraction(m) if not _is_symbolic(m) else m for m in multiplicities]
    moments = [as_fraction(m) for m in moments]
    found = []
    for choice in permutations(allowed, len(mults)):
        ok = True
        for j, mu in enumerate(moments, 1):
            if sum((m * x ** j for m, x in zip(mults, choice)), Fraction(0)) != mu:
                ok = False
                break
        if ok:
            found.append(tuple(choice))
    if not found:
        raise NoSolution("no assignment of the allowed eigenvalues reproduces the moments")
    return found


# -- integer solutions ---------------------------------------------------------------

@dataclass
class IntegerSolution:
    eigenvalues: tuple
    values: tuple           # multiplicities in eigenvalue order; symbolic total shows as "d-k"
    d: object = None
    note: str = ""

    def to_record(self):
        rec = {"eigenvalues": [_fmt(x) for x in self.eigenvalues], "solution": list(self.values)}
        rec["d"] = None if self.d is None else _fmt(self.d)
        if self.note:
            rec["note"] = self.note
        return rec


def integer_solutions(eigenvalues, constraints, d=None):
    """Non-negative integer multiplicities for the given eigenvalues.

    ``constraints`` is a list of ``(j, value)`` meaning sum_l l^j d_l = value
    for j >= 1; a value may be a RatFunc in d.  The multiplicity of eigenvalue
    0 (if present) is d minus the others.  Each multiplicity of a nonzero
    eigenvalue is bounded through a constant first-moment constraint."""
    lam = [as_fraction(x) for x in eigenvalues]
    nonzero = [x for x in lam if x != 0]
    const = [(j, as_fraction(v)) for j, v in constraints if not _is_symbolic(v)]
    symbolic = [(j, RatFunc.coerce(v)) for j, v in constraints if _is_symbolic(v)]
    bound_src = [(j, v) for j, v in const if all(x > 0 for x in nonzero)]
    if not bound_src:
        raise UnboundedSearch("no constant moment with positive eigenvalues bounds the search")
    j0, v0 = bound_src[0]
    bounds = [int(v0 / x ** j0) for x in nonzero]
    results = []
    for combo in product(*(range(b + 1) for b in bounds)):
        if any(sum((x ** j * m for x, m in zip(nonzero, combo)), Fraction(0)) != v for j, v in const):
            continue
        d_values = [None]
        for j, v in symbolic:
            lhs = sum((x ** j * m for x, m in zip(nonzero, combo)), Fraction(0))
            eq = v.num - v.den * lhs
            roots = [r for r in rational_roots(eq, "d") if r.denominator == 1]
            if d_values == [None]:
                d_values = roots
            else:
                d_values = [r for r in d_values if r in roots]
        if d is not None:
            d_values = [as_fraction(d)] if (d_values == [None] or as_fraction(d) in d_values) else []
        for dv in d_values:
            rest = sum(combo)
            vals = iter(combo)
            row = []
            for x in lam:
                if x == 0:
                    if dv is None:
                        row.append(f"d-{rest}" if rest else "d")
                    else:
                        if dv - rest < 0:
                            row = None
                            break
                        row.append(int(dv - rest))
                else:
                    row.append(next(vals))
            if row is not None:
                results.append(IntegerSolution(tuple(lam), tuple(row), dv))
    return results


@dataclass
class LatticeReport:
    moment1: object
    moment2: object
    eq1_solutions: list
    solutions: list
    excluded: list
    rank: int

    def to_record(self):
        return {
            "moment1": _fmt(self.moment1),
            "moment2": _fmt(self.moment2),
            "eq1_solutions": [list(s.values) for s in self.eq1_solutions],
            "solutions": [list(s.values) for s in self.solutions],
            "excluded": [list(s.values) for s in self.excluded],
            "rank": self.rank,
        }


LATTICE_EIGENVALUES = (Fraction(0), Fraction(1, 2), Fraction(1, 16))


def lattice_case() -> LatticeReport:
    """h = 1 with c = d = rank, e a c = 1/2 Virasoro vector ((e|e) = 1/4)."""
    mu1, mu2 = virasoro_moments(D, 1, D, Fraction(1, 4), 2)
    first = integer_solutions(LATTICE_EIGENVALUES, [(1, mu1)])
    both = integer_solutions(LATTICE_EIGENVALUES, [(1, mu1), (2, mu2)])
    kept, excluded = [], []
    for s in both:
        if s.values[2] != 0:
            s.note = ("excluded (argument not reproduced): K must be sqrt(2)E8, which carries another c=1/2 "
                      "vector with eigenvalues only 0, 1/2 whose degree-2 trace is contradictory")
            excluded.append(s)
        else:
            kept.append(s)
    rank = int(kept[0].d) if len(kept) == 1 else -1
    return LatticeReport(mu1, mu2, first, both, excluded, rank)


# -- closed forms for c = 1/2 vectors on V_2 -------------------------------------------

@dataclass
class MatsuoResult:
    d0: Fraction
    d_half: Fraction
    d_16: Fraction
    tau: Fraction

    def to_record(self):
        return {"d0": _fmt(self.d0), "d_half": _fmt(self.d_half), "d_16": _fmt(self.d_16), "tau": _fmt(self.tau)}


def matsuo_c_half(c, dim_v2) -> MatsuoResult:
    c, n = as_fraction(c), as_fraction(dim_v2)
    den = c * (5 * c + 22)
    if den == 0:
        raise ZeroDenominator(f"c(5c+22) vanishes at c = {_fmt(c)}")
    d0 = ((5 * c * c - 100 * c + 1188) * n - 545 * c * c - 2006 * c) / den
    d_half = -2 * ((3 * c - 110) * n + 50 * c * c + 192 * c) / den
    d_16 = 64 * ((2 * c - 22) * n + 10 * c * c + 37 * c) / den
    tau = ((5 * c * c - 234 * c + 2816) * n - 1280 * c * c - 4736 * c) / den
    return MatsuoResult(d0, d_half, d_16, tau)


# -- sigma traces -----------------------------------------------------------------

SIGMA_SIGNS = {Fraction(0): 1, Fraction(3, 5): 1, Fraction(1, 10): -1, Fraction(3, 2): -1}


def sigma_trace(multiplicities: dict, signs=None) -> int:
    signs = SIGMA_SIGNS if signs is None else {as_fraction(k): v for k, v in signs.items()}
    total = 0
    for lam, m in multiplicities.items():
        lam = as_fraction(lam)
        if lam not in signs:
            raise MissingSign(f"no sigma sign for eigenvalue {_fmt(lam)}")
        total += signs[lam] * as_fraction(m)
    return int(total) if Fraction(total).denominator == 1 else total


# -- the c = 7/10, h = 3/2 design classification -----------------------------------------

BM_EIGENVALUES = (Fraction(0), Fraction(1, 10), Fraction(3, 5), Fraction(3, 2))
E_NORM_7_10 = Fraction(7, 20)

D35_PRINTED = RatFunc(Poly.parse("-7*d*(2*c-47)*(10*c-7)*(82*c-37)"),
                      Poly.parse("80*c*(2*c-1)*(5*c+22)*(7*c+68)"))
D32_PRINTED = RatFunc(Poly.parse("d*(800*c^3-27588*c^2+238596*c-112133)"),
                      Poly.parse("80*c*(2*c-1)*(5*c+22)*(7*c+68)"))


@dataclass
class Design6Result:
    d35: RatFunc
    d32: RatFunc
    matches_printed: bool
    roots: list
    candidates: list = field(default_factory=list)   # (c, d, admissible, reason)

    @property
    def admissible(self):
        return [(c, d) for c, d, ok, _ in self.candidates if ok]

    def to_record(self):
        return {
            "d_3/5": str(self.d35),
            "d_3/2": str(self.d32),
            "matches_printed": self.matches_printed,
            "roots": [_fmt(r) for r in self.roots],
            "candidates": [{"c": _fmt(c), "d": _fmt(d), "admissible": ok, "reason": why}
                           for c, d, ok, why in self.candidates],
            "admissible": [[_fmt(c), _fmt(d)] for c, d in self.admissible],
        }


def design6_classification() -> Design6Result:
    moments = [RatFunc(D)] + virasoro_moments(C, Fraction(3, 2), D, E_NORM_7_10, 3)
    matrix = [[power(x, j) for x in BM_EIGENVALUES] for j in range(4)]
    sol = dict(zip(BM_EIGENVALUES, linsolve(matrix, moments)))
    d35, d32 = sol[Fraction(3, 5)], sol[Fraction(3, 2)]
    matches = d35 == D35_PRINTED and d32 == D32_PRINTED
    # d_{3/5} = d * N(c) / Q(c); d != 0 so N(c) = 0
    n_c = d35.num.divexact(D)
    roots = [r for r in rational_roots(n_c, "c")]
    result = Design6Result(d35, d32, matches, roots)
    for r in roots:
        # d_{3/2} = d * M(c) / Q(c) = 1  =>  d = Q(r) / M(r)
        m_r = d32.num.divexact(D).eval({"c": r, "d": 0, "h": 0})
        q_r = d32.den.eval({"c": r, "d": 0, "h": 0})
        if m_r == 0:
            result.candidates.append((r, None, False, "d_3/2 vanishes identically"))
            continue
        dv = q_r / m_r
        if dv.denominator == 1 and dv > 0:
            result.candidates.append((r, dv, True, "d is a positive integer"))
        else:
            why = "d is not an integer" if dv.denominator != 1 else "d is not positive"
            result.candidates.append((r, dv, False, why))
    return result


# -- the Baby-monster pipeline ---------------------------------------------------------

@dataclass
class BabyMonsterResult:
    moments: list
    assignments: list
    multiplicities: dict
    sigma: int

    def to_record(self):
        return {
            "moments": [_fmt(m) for m in self.moments],
            "assignments": [[_fmt(x) for x in a] for a in self.assignments],
            "multiplicities": {_fmt(k): _fmt(v) for k, v in self.multiplicities.items()},
            "sigma_trace": _fmt(self.sigma),
        }


def baby_monster_pipeline(c=Fraction(47, 2), h=Fraction(3, 2), d=4371, c_e=Fraction(7, 10),
                          component_dims=(1, 1938, 2432)):
    kappa = as_fraction(c_e) / 2
    moments = virasoro_moments(c, h, d, kappa, 3)
    weights = minimal_series(4, 5).weight_set()
    assignments = assign_eigenvalues(weights, component_dims, moments)
    problem = MultiplicityProblem(BM_EIGENVALUES, [as_fraction(d)] + moments)
    mult = solve_multiplicities(problem).values
    return BabyMonsterResult(moments, assignments, mult, sigma_trace(mult))
