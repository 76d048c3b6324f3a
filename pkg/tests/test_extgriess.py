from fractions import Fraction

import pytest

from griess.errors import NonHalfInteger, NotCoprime, ParseError, UnsupportedTopWeight
from griess.extgriess import (
    ExtendedGriessAlgebra, check_axioms, epsilon, free_fermion, minimal_series, ns_bracket_check,
    parse_lincomb, root_analysis, virasoro_algebra,
)


def test_epsilon():
    assert epsilon(3) == -1
    assert epsilon(2) == 1
    assert epsilon(Fraction(3, 2)) == 1
    with pytest.raises(NonHalfInteger):
        epsilon(Fraction(1, 3))


def test_parse_lincomb():
    assert parse_lincomb("2*e + 1/2*x - y") == {"e": 2, "x": Fraction(1, 2), "y": -1}
    assert parse_lincomb("0") == {}


def test_free_fermion_axioms():
    assert check_axioms(free_fermion()).ok
    bad = check_axioms(free_fermion(Fraction(1, 3)))
    assert not bad.ok
    assert any("invariance" in v for v in bad.violations)


def test_virasoro_only_axioms():
    assert check_axioms(virasoro_algebra(Fraction(7, 10))).ok


def test_parse_error():
    with pytest.raises(ParseError):
        ExtendedGriessAlgebra.parse("BOGUS x")
    with pytest.raises(ParseError):
        ExtendedGriessAlgebra.parse("FORM x x one")


def test_root_analysis_cases():
    r = root_analysis(Fraction(1, 2))
    assert (r.norm_x, r.central_charge) == (Fraction(1, 4), Fraction(1, 2))
    flagged = root_analysis(Fraction(1, 2), Fraction(1, 5))
    assert not flagged.consistent and flagged.notes
    r = root_analysis(Fraction(3, 2), Fraction(3, 8))
    assert r.norm_x == Fraction(1, 2)
    assert r.central_charge == 3
    assert root_analysis(Fraction(5, 2)).central_charge == Fraction(-13, 14)
    with pytest.raises(UnsupportedTopWeight):
        root_analysis(Fraction(7, 2))
    with pytest.raises(ValueError):
        root_analysis(Fraction(3, 2))


@pytest.mark.parametrize("c_a", [Fraction(1), Fraction(7, 10), Fraction(-3, 2), Fraction(47, 2)])
def test_ns_brackets(c_a):
    rep = ns_bracket_check(c_a)
    assert rep.ok and rep.checked == 300


def test_ns_fault_injection():
    rep = ns_bracket_check(1, central=lambda r: (4 * r * r - 1) / Fraction(12) + 1)
    assert not rep.ok
    assert rep.failures[0] == "[G(1/2),G(-1/2)]+"


def test_minimal_series():
    m = minimal_series(4, 5)
    assert m.c == Fraction(7, 10)
    assert m.weight_set() == sorted(map(Fraction, ["0", "7/16", "3/80", "3/2", "3/5", "1/10"]))
    m = minimal_series(7, 4)
    assert m.c == Fraction(-13, 14)
    assert m.weights[(6, 1)] == Fraction(5, 2)
    assert minimal_series(3, 4).c == Fraction(1, 2)
    with pytest.raises(NotCoprime):
        minimal_series(4, 6)
