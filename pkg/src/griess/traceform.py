"""Trace formulae for zero-modes of Griess algebra elements on V_h.

The trace of o(a0)...o(a_{k-1}) is expanded with the Zhu product into
pairings with Casimir vectors, each pairing is rewritten into invariant
atoms by :mod:`griess.vertex`, and the result is collected into the
symmetrised patterns used by the coefficient tables.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .casimir import casimir_expansion
from .data import appendix_b
from .errors import MissingInvariant, UnsupportedDegree, ZeroDenominator
from .exact import D, H, Poly, ZERO, as_fraction
from .vertex import (
    OMEGA, Inv, atom_B, atom_P, atom_Q, atom_Q5, atom_T, atom_w, atom_word,
    fmt_atom, vc, virasoro_letter,
)
from .virasoro import d_polynomial


def arg(i: int) -> str:
    return f"a{i}"


# -- Zhu expansion ----------------------------------------------------------

@dataclass(frozen=True)
class ZhuTerm:
    indices: tuple
    sign: int
    weight: int
    multiplicity: int

    def word(self, args=None):
        k = len(self.indices) + 1
        args = args or [arg(i) for i in range(k)]
        return tuple(zip(args[:-1], self.indices)) + ((args[-1], -1),)


def zhu_expand(k: int):
    """All 3^(k-1) index tuples with sign (-1)^m, Casimir weight m and the
    binomial multiplicity 2^(number of zero indices) of the Zhu product."""
    if not 1 <= k <= 5:
        raise UnsupportedDegree(f"trace degree {k} outside 1..5")
    out = []
    for idx in iproduct((-1, 0, 1), repeat=k - 1):
        m = k + 1 - sum(idx)
        out.append(ZhuTerm(idx, (-1) ** m, m, 2 ** idx.count(0)))
    return out


# -- patterns ---------------------------------------------------------------

def _parse_sym_term(term: str):
    atoms = []
    for grp in re.findall(r"\(([^()]*)\)", term):
        fields = grp.split("|")
        if fields[-1] == "w":
            atoms.append(atom_w(arg(int(fields[0]))))
        elif len(fields) == 2:
            atoms.append(atom_B(arg(int(fields[0])), arg(int(fields[1]))))
        elif len(fields) == 3:
            atoms.append(atom_T(*(arg(int(x)) for x in fields)))
        else:
            raise ValueError(f"bad Sym term {term!r}")
    return tuple(sorted(atoms, key=_akey))


def _akey(a):
    from .vertex import atom_key
    return atom_key(a)


def _mono(*atoms):
    return tuple(sorted(atoms, key=_akey))


def _w(*idx):
    return [atom_w(arg(i)) for i in idx]


def _quin_pair(code: str):
    i0, i1, i2, i3, i4 = (arg(int(ch)) for ch in code)
    return atom_P((i0, i1), i2, (i3, i4))


QUINPAIR_IDS = ("01423", "01324", "12034", "01234", "02134", "03214", "04213", "02413",
                "03412", "02314", "04312", "04123", "03124", "14023", "13024")

_DEG5_EXPLICIT = {
    # (a^i|w)(a^p a^q|a^r a^s) five-term sums
    "4": [(0, (1, 2), (3, 4)), (1, (0, 2), (3, 4)), (2, (0, 1), (3, 4)), (3, (0, 1), (2, 4)), (4, (0, 1), (2, 3))],
    "5": [(0, (1, 3), (2, 4)), (1, (0, 3), (2, 4)), (2, (0, 3), (1, 4)), (3, (0, 2), (1, 4)), (4, (0, 2), (1, 3))],
    "6": [(0, (1, 4), (2, 3)), (1, (0, 4), (2, 3)), (2, (0, 4), (1, 3)), (3, (0, 4), (1, 2)), (4, (0, 3), (1, 2))],
}

_SYM_OF = {
    (3, "1"): "wB",
    (4, "1"): "wwB", (4, "2"): "wT", (4, "3"): "BB",
    (5, "1"): "wwwB", (5, "2"): "wwT", (5, "3"): "wBB", (5, "7"): "BT",
}


@lru_cache(maxsize=None)
def pattern_monomials(k: int, pid: str):
    """The monomials (tuples of atoms in a0..a_{k-1}) summed by a pattern."""
    if (k, pid) in _SYM_OF:
        sym = appendix_b()[2]
        return tuple(_parse_sym_term(t) for t in sym[k][_SYM_OF[(k, pid)]].split("+"))
    if pid == "0":
        return (_mono(*_w(*range(k))),)
    if k == 2 and pid == "1":
        return (_mono(atom_B("a0", "a1")),)
    if k == 3 and pid == "2":
        return (_mono(atom_T("a0", "a1", "a2")),)
    if k == 4 and pid in ("4", "5", "6"):
        i = int(pid) - 3
        rest = [j for j in (1, 2, 3) if j != i]
        return (_mono(atom_Q(("a0", arg(i)), (arg(rest[0]), arg(rest[1])))),)
    if k == 5 and pid in _DEG5_EXPLICIT:
        return tuple(_mono(atom_w(arg(i)), atom_Q((arg(p), arg(q)), (arg(r), arg(s))))
                     for i, (p, q), (r, s) in _DEG5_EXPLICIT[pid])
    if k == 5 and pid == "8":
        return (_mono(atom_Q5(*(arg(i) for i in range(5)))),)
    if k == 5 and pid in QUINPAIR_IDS:
        return (_mono(_quin_pair(pid)),)
    raise KeyError(f"no pattern {pid!r} in degree {k}")


PATTERN_IDS = {
    1: ("0",),
    2: ("0", "1"),
    3: ("0", "1", "2"),
    4: ("0", "1", "2", "3", "4", "5", "6"),
    5: ("0", "1", "2", "3", "4", "5", "6", "7", "8") + QUINPAIR_IDS,
}

PATTERN_LABELS = {
    (1, "0"): "(a0|w)",
    (2, "0"): "(a0|w)(a1|w)", (2, "1"): "(a0|a1)",
    (3, "0"): "(a0|w)(a1|w)(a2|w)", (3, "1"): "Sym (a0|w)(a1|a2)", (3, "2"): "(a0|a1|a2)",
    (4, "0"): "(a0|w)(a1|w)(a2|w)(a3|w)", (4, "1"): "Sym (a0|w)(a1|w)(a2|a3)",
    (4, "2"): "Sym (a0|w)(a1|a2|a3)", (4, "3"): "Sym (a0|a1)(a2|a3)",
    (4, "4"): "(a0a1|a2a3)", (4, "5"): "(a0a2|a1a3)", (4, "6"): "(a0a3|a1a2)",
    (5, "0"): "(a0|w)(a1|w)(a2|w)(a3|w)(a4|w)", (5, "1"): "Sym (a0|w)(a1|w)(a2|w)(a3|a4)",
    (5, "2"): "Sym (a0|w)(a1|w)(a2|a3|a4)", (5, "3"): "Sym (a0|w)(a1|a2)(a3|a4)",
    (5, "4"): "sum (ai|w)(apaq|aras) [F4 family]", (5, "5"): "sum (ai|w)(apaq|aras) [F5 family]",
    (5, "6"): "sum (ai|w)(apaq|aras) [F6 family]", (5, "7"): "Sym (a0|a1)(a2|a3|a4)",
    (5, "8"): "(a0a1a2a3a4)",
}


def pattern_label(k, pid):
    if (k, pid) in PATTERN_LABELS:
        return PATTERN_LABELS[(k, pid)]
    i0, i1, i2, i3, i4 = pid
    return f"(a{i0}a{i1}|a{i2}|a{i3}a{i4})"


# -- tables -----------------------------------------------------------------

@dataclass
class TraceFormulaTable:
    degree: int
    denominator: Poly
    coeffs: dict = field(default_factory=dict)
    source: str = "derived"

    def expand(self) -> Inv:
        """Numerator as an explicit Inv in the atoms of a0..a_{k-1}."""
        out = Inv()
        for pid, coef in self.coeffs.items():
            for mono in pattern_monomials(self.degree, pid):
                out = out + Inv({mono: coef})
        return out

    def to_record(self):
        return {
            "degree": self.degree,
            "denominator": str(self.denominator),
            "source": self.source,
            "coefficients": {pid: str(v) for pid, v in self.coeffs.items()},
        }


def collect_patterns(k: int, inv: Inv, strict: bool = True) -> dict:
    """Read off pattern coefficients; every monomial must belong to a pattern
    and all monomials of one pattern must share the coefficient."""
    seen = set()
    out = {}
    for pid in PATTERN_IDS[k]:
        monos = pattern_monomials(k, pid)
        coefs = {inv.terms.get(m, ZERO) for m in monos}
        if len(coefs) != 1:
            raise ValueError(f"pattern {pattern_label(k, pid)} has unequal coefficients")
        coef = coefs.pop()
        if not coef.is_zero():
            out[pid] = coef
        seen.update(monos)
    extra = [m for m in inv.terms if m not in seen]
    if extra and strict:
        raise ValueError("monomials outside the pattern list: "
                         + ", ".join("".join(fmt_atom(a) for a in m) for m in extra[:3]))
    return out


def reduce_pairing(expr) -> Inv:
    """Vacuum coefficient of a mode expression: a single word, or a mapping
    {word: coefficient} read as a linear combination."""
    if isinstance(expr, tuple):
        return vc(expr)
    out = Inv()
    for word, coef in expr.items():
        coef = Poly.parse(coef) if isinstance(coef, str) else Poly.coerce(coef)
        out = out + vc(tuple(word)).scale(coef)
    return out


def trace_numerator(k: int, args=None) -> Inv:
    """D_{2k}(c) * tr o(a0)...o(a_{k-1}) as an Inv, by rewriting."""
    dk = d_polynomial(2 * k)
    total = Inv()
    for term in zhu_expand(k):
        exp = casimir_expansion(term.weight)
        scale = dk.divexact(exp.denominator) * (term.sign * term.multiplicity)
        xword = term.word(args)
        for parts, coef in exp.coeffs.items():
            word = tuple(virasoro_letter(p) for p in reversed(parts)) + xword
            val = vc(word)
            if not val.is_zero():
                total = total + val.scale(coef * scale)
    return total


@lru_cache(maxsize=None)
def _derived(k):
    inv = trace_numerator(k)
    return collect_patterns(k, inv)


def derive_trace_formula(k: int, allow_degree4: bool = False) -> TraceFormulaTable:
    if not 1 <= k <= (4 if allow_degree4 else 3):
        raise UnsupportedDegree(f"trace formulae are derived by rewriting only up to degree "
                                f"{4 if allow_degree4 else 3}")
    return TraceFormulaTable(k, d_polynomial(2 * k), dict(_derived(k)), "derived")


def appendix_table(k: int) -> TraceFormulaTable:
    if k not in (3, 4, 5):
        raise UnsupportedDegree(f"the coefficient tables cover degrees 3..5, not {k}")
    f_tab = appendix_b()[0][k]
    coeffs = {pid: f_tab[pid] for pid in PATTERN_IDS[k] if not f_tab[pid].is_zero()}
    return TraceFormulaTable(k, d_polynomial(2 * k), coeffs, "table")


def formula_table(k: int) -> TraceFormulaTable:
    if not 1 <= k <= 5:
        raise UnsupportedDegree(f"trace degree {k} outside 1..5")
    if k <= 3:
        return derive_trace_formula(k)
    return appendix_table(k)


# -- relabelling and evaluation ----------------------------------------------

def relabel_atom(a, mapping):
    f = lambda x: mapping.get(x, x)
    kind = a[0]
    if kind == "w":
        return atom_w(f(a[1]))
    if kind == "B":
        return atom_B(f(a[1]), f(a[2]))
    if kind == "T":
        return atom_T(f(a[1]), f(a[2]), f(a[3]))
    if kind == "Q":
        return atom_Q(tuple(map(f, a[1])), tuple(map(f, a[2])))
    if kind == "P":
        return atom_P(tuple(map(f, a[1])), f(a[2]), tuple(map(f, a[3])))
    if kind == "Q5":
        return atom_Q5(*map(f, a[1:]))
    raise ValueError(f"unknown atom {a!r}")


def relabel(inv: Inv, mapping) -> Inv:
    return inv.map_atoms(lambda a: Inv.atom(relabel_atom(a, mapping)))


def _as_at(at):
    return {k: as_fraction(v) for k, v in at.items()}


def evaluate_trace(table: TraceFormulaTable, values, at, args=None):
    """Exact trace value.

    ``values`` maps atoms (tuples or their printed form such as ``(e|e|e)``)
    to rationals; ``args`` optionally renames a0..a_{k-1}, e.g. ``["e"]*3``.
    """
    at = _as_at(at)
    den = table.denominator.eval(at)
    if den == 0:
        raise ZeroDenominator(f"D_{2 * table.degree}(c) vanishes at c = {at['c']}")
    inv = table.expand()
    if args is not None:
        inv = relabel(inv, {arg(i): a for i, a in enumerate(args)})
    lookup = {}
    for key, val in values.items():
        lookup[key if isinstance(key, tuple) else str(key)] = as_fraction(val)
    total = Fraction(0)
    for mono, coef in inv.terms.items():
        term = coef.eval(at)
        for a in mono:
            if a in lookup:
                term *= lookup[a]
            elif fmt_atom(a) in lookup:
                term *= lookup[fmt_atom(a)]
            else:
                raise MissingInvariant(f"no value for {fmt_atom(a)}")
        total += term
    return total / den


# -- Virasoro specialisation ------------------------------------------------

KAPPA = ("kappa",)

# values on a Virasoro vector e with (e|e) = kappa, in units of kappa
VIRASORO_VALUES = {"w": 1, "B": 1, "T": 2, "Q": 4, "P": 8, "Q5": 12}


def virasoro_atom_values(kappa_units=None):
    """Cross-check of VIRASORO_VALUES inside the Virasoro algebra of e.

    e generates a Virasoro algebra of central charge 2 kappa with
    L_e(n) = e_(n+1), so every atom is a vacuum coefficient of a word of
    Virasoro modes; the result is returned as multiples of c_e/2."""
    from .virasoro import vacuum_mode_word
    half = Fraction(1, 2)
    out = {}
    for kind in ("w", "B", "T", "Q", "P", "Q5"):
        if kind in ("w", "B"):
            word = [2, -2]
        elif kind == "T":
            word = [2, 0, -2]
        elif kind == "Q":
            word = [2, 0, 0, -2]
        elif kind == "P":
            word = [2, 0, 0, 0, -2]
        else:
            word = [2, 1, 0, -1, -2]
        val = vacuum_mode_word(word)
        out[kind] = val.terms[(1, 0, 0)] / half
    return out


def _kappa_sub(a):
    return Inv({(KAPPA,) * 1: Poly.const(VIRASORO_VALUES[a[0]])})


def specialize_virasoro(t: int, table=None) -> dict:
    """{j: E^(t)_j}: the trace of o(e)^t as a polynomial in kappa = (e|e)."""
    table = formula_table(t) if table is None else table
    inv = relabel(table.expand(), {arg(i): "e" for i in range(t)})
    inv = inv.map_atoms(_kappa_sub)
    out = {}
    for mono, coef in inv.terms.items():
        out[len(mono)] = out.get(len(mono), ZERO) + coef
    return {j: v for j, v in sorted(out.items(), reverse=True) if not v.is_zero()}


# -- consistency checks -------------------------------------------------------

def omega_atom_value(a) -> Poly:
    """An atom with every argument replaced by omega."""
    rep = relabel_atom(a, {x: OMEGA for x in _atom_args(a)})
    val = vc(atom_word(rep))
    return val.terms.get((), ZERO)


def _atom_args(a):
    out = []
    for v in a[1:]:
        if isinstance(v, tuple):
            out.extend(v)
        else:
            out.append(v)
    return out


def omega_saturation(k: int, table=None) -> bool:
    """All arguments equal omega must give tr L(0)^k = h^k d."""
    table = formula_table(k) if table is None else table
    inv = table.expand().map_atoms(lambda a: Inv.const(omega_atom_value(a)))
    num = inv.terms.get((), ZERO)
    return num == (H ** k) * D * table.denominator


@dataclass
class ReductionReport:
    degree: int
    slot: int
    ok: bool
    residual: str


def substitute_omega(table: TraceFormulaTable, slot: int) -> Inv:
    """h * numerator with a_slot = omega/h, arguments renamed to a0..a_{k-2}."""
    k = table.degree
    target = arg(slot)
    mapping = {arg(j): arg(j - 1) for j in range(slot + 1, k)}

    def sub(a):
        if target not in _atom_args(a):
            return Inv.atom(a)
        rep = relabel_atom(a, {target: OMEGA}) if a[0] != "Q5" else \
            atom_Q5(*[OMEGA if x == target else x for x in a[1:]])
        return vc(atom_word(rep))

    return relabel(table.expand().map_atoms(sub), mapping)


def reduction_check(k: int, slots=(0,)):
    """Setting one argument to omega/h must reproduce the degree k-1 formula."""
    if not 2 <= k <= 5:
        raise UnsupportedDegree(f"reduction check needs degree 2..5, not {k}")
    high, low = formula_table(k), formula_table(k - 1)
    reports = []
    for slot in slots:
        lhs = substitute_omega(high, slot).scale(low.denominator)
        rhs = low.expand().scale(high.denominator * H)
        diff = lhs - rhs
        reports.append(ReductionReport(k, slot, diff.is_zero(), str(diff) if not diff.is_zero() else "0"))
    return reports
