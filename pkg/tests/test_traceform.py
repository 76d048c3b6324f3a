from fractions import Fraction

import pytest

from griess.data import appendix_b
from griess.errors import MissingInvariant, UnsupportedDegree, ZeroDenominator
from griess.exact import C, D, H, Poly
from griess.traceform import (
    VIRASORO_VALUES, derive_trace_formula, evaluate_trace, formula_table, omega_saturation,
    pattern_label, reduce_pairing, reduction_check, specialize_virasoro, virasoro_atom_values,
    zhu_expand,
)
from griess.vertex import OMEGA, atom_Q, fmt_atom, product, vc, virasoro_letter


# -- Zhu expansion ---------------------------------------------------------

def test_zhu_expand_shapes():
    (t,) = zhu_expand(1)
    assert (t.indices, t.sign, t.weight, t.multiplicity) == ((), 1, 2, 1)
    assert sorted(t.weight for t in zhu_expand(2)) == [2, 3, 4]
    five = zhu_expand(5)
    assert len(five) == 81
    assert {t.weight for t in five} == set(range(2, 11))
    assert all(t.sign == (-1) ** t.weight for t in five)
    with pytest.raises(UnsupportedDegree):
        zhu_expand(6)


# -- the rewriting engine ---------------------------------------------------

def test_reduce_pairing_examples():
    assert str(reduce_pairing((("a0", 3), ("a1", -1)))) == "(1)*(a0|a1)"
    # (L(2) a0_(1) a1 | vacuum) = 2 (a0|a1)
    assert str(reduce_pairing((virasoro_letter(2), ("a0", 1), ("a1", -1)))) == "(2)*(a0|a1)"
    got = reduce_pairing((("a0", 4), ("a1", 1), ("a2", 0), ("a3", -1)))
    assert str(got) == "(3)*(a0a1|a2a3) + (-1)*(a0a2|a1a3) + (1)*(a0a3|a1a2)"


def test_reduce_pairing_linear_combination():
    w1 = (("a0", 3), ("a1", -1))
    w2 = (("a0", 3), ("a0", -1))
    got = reduce_pairing({w1: "c", w2: 2})
    assert got == reduce_pairing(w1).scale(C) + reduce_pairing(w2).scale(Poly.const(2))


def test_omega_rules():
    assert product(OMEGA, "x") == (2, "x")
    # (omega|omega) = c/2
    assert vc(((OMEGA, 3), (OMEGA, -1))).terms[()] == C * Fraction(1, 2)


def test_quad_pair_canonical():
    assert atom_Q(("b", "a"), ("d", "c")) == atom_Q(("c", "d"), ("a", "b"))


# -- tables -------------------------------------------------------------------

def test_derive_degree_1_and_2():
    t1 = derive_trace_formula(1)
    assert t1.denominator == C
    assert t1.coeffs == {"0": 2 * H * D}
    t2 = derive_trace_formula(2)
    assert t2.denominator == C * (5 * C + 22)
    assert t2.coeffs["0"] == 4 * H * D * (5 * H + 1)
    assert t2.coeffs["1"] == 2 * H * D * (22 * H - C)


def test_derive_degree_3_matches_table():
    assert derive_trace_formula(3).coeffs == formula_table(3).coeffs
    assert derive_trace_formula(3).coeffs["0"] == Poly.parse("8*h*d*((70*h^2+42*h+8)*c+29*h^2-57*h-2)")


def test_derive_guard():
    with pytest.raises(UnsupportedDegree):
        derive_trace_formula(4)
    with pytest.raises(UnsupportedDegree):
        formula_table(6)


def test_degree_4_derivation_agrees_with_table():
    assert derive_trace_formula(4, allow_degree4=True).coeffs == formula_table(4).coeffs


def test_table_lookups():
    f = appendix_b()[0]
    assert pattern_label(4, "5") == "(a0a2|a1a3)"
    assert formula_table(4).coeffs["5"] == f[4]["5"]
    assert str(f[4]["5"]).startswith("-30*c^5*d*h")
    assert pattern_label(5, "8") == "(a0a1a2a3a4)"
    assert formula_table(5).coeffs["8"] == f[5]["8"]
    assert f[5]["03214"] == f[5]["04213"]


# -- evaluation ----------------------------------------------------------------

BM_AT = {"c": Fraction(47, 2), "d": 4371, "h": Fraction(3, 2)}
BM_VALUES = {"(e|ω)": Fraction(7, 20), "(e|e)": Fraction(7, 20), "(e|e|e)": Fraction(7, 10)}


def test_evaluate_baby_monster():
    assert evaluate_trace(formula_table(1), BM_VALUES, BM_AT, ["e"]) == Fraction(1953, 10)
    assert evaluate_trace(formula_table(2), BM_VALUES, BM_AT, ["e"] * 2) == Fraction(2163, 100)
    assert evaluate_trace(formula_table(3), BM_VALUES, BM_AT, ["e"] * 3) == Fraction(5313, 1000)


def test_evaluate_errors():
    with pytest.raises(ZeroDenominator):
        evaluate_trace(formula_table(2), BM_VALUES, {"c": Fraction(-22, 5), "d": 1, "h": 1}, ["e"] * 2)
    with pytest.raises(MissingInvariant):
        evaluate_trace(formula_table(3), {"(e|ω)": 1}, BM_AT, ["e"] * 3)


def test_evaluate_permutation_symmetry_diagonal():
    # an orthogonal pair of commuting idempotent-like vectors: all mixed atoms vanish
    vals = {"(x|ω)": 1, "(y|ω)": 2, "(x|x)": 1, "(y|y)": 2, "(x|y)": 0,
            "(x|x|x)": 2, "(y|y|y)": 4, "(x|x|y)": 0, "(x|y|y)": 0}
    at = {"c": 3, "d": 5, "h": Fraction(1, 2)}
    t = formula_table(3)
    a = evaluate_trace(t, vals, at, ["x", "x", "y"])
    b = evaluate_trace(t, vals, at, ["y", "x", "x"])
    c = evaluate_trace(t, vals, at, ["x", "y", "x"])
    assert a == b == c


# -- Virasoro specialisation and consistency ------------------------------------

def test_virasoro_values_oracle():
    assert virasoro_atom_values() == VIRASORO_VALUES


def test_specialize_low():
    assert specialize_virasoro(1) == {1: 2 * H * D}
    e3 = specialize_virasoro(3)
    f3 = appendix_b()[0][3]
    assert e3[3] == f3["0"]
    assert e3[2] == 3 * f3["1"]
    assert e3[1] == 2 * f3["2"]


@pytest.mark.parametrize("t", [3, 4, 5])
def test_specialize_matches_e_rows(t):
    e = appendix_b()[1][t]
    assert specialize_virasoro(t) == {j: v for j, v in e.items() if not v.is_zero()}


def test_e5_leading_term():
    assert str(specialize_virasoro(5)[1]).startswith("-200*c^6*d*h")


@pytest.mark.parametrize("k", range(1, 6))
def test_omega_saturation(k):
    assert omega_saturation(k)


@pytest.mark.parametrize("k", range(2, 6))
def test_reduction_all_slots(k):
    reports = reduction_check(k, slots=tuple(range(k)))
    assert all(r.ok for r in reports), [r.residual for r in reports if not r.ok]


def test_reduction_guard():
    with pytest.raises(UnsupportedDegree):
        reduction_check(1)


def test_atom_printing():
    assert fmt_atom(("w", "e")) == "(e|ω)"
