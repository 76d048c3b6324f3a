from fractions import Fraction

import pytest

from griess.casimir import (
    casimir_at, casimir_expansion, design_residual, kappa_pairing, verify_appendix_a,
)
from griess.errors import DegreeMismatch, SingularGram
from griess.exact import C, D, Poly


def test_low_degrees():
    assert casimir_expansion(0).coeffs == {(): D}
    assert casimir_expansion(1).coeffs == {}
    e2 = casimir_expansion(2)
    assert e2.denominator == C
    assert e2.coefficient((2,)) == Poly.parse("2*h*d")


def test_degree_4_matches_table_print():
    e = casimir_expansion(4)
    assert e.denominator == Poly.parse("c*(5*c+22)")
    assert e.coefficient((4,)) == Poly.parse("3*h*d*(c-2*h+4)")
    assert e.coefficient((2, 2)) == Poly.parse("2*h*(5*h+1)*d")


def test_kappa_pairing_recursion():
    assert kappa_pairing((2,), 2) == Poly.parse("h*d")
    assert kappa_pairing((2, 2), 4) == Poly.parse("h*d*(h+2)")
    with pytest.raises(DegreeMismatch):
        kappa_pairing((2,), 3)
    assert kappa_pairing((3, 2), 5) == Poly.parse("d*(2*h+2)*h")


@pytest.mark.parametrize("m", range(2, 9))
def test_design_residual_vanishes(m):
    assert all(r.is_zero() for r in design_residual(m))


def test_casimir_at_singular_point():
    with pytest.raises(SingularGram):
        casimir_at(4, Fraction(-22, 5))
    vals = casimir_at(2, 24)
    assert vals[(2,)].eval({"d": 1, "h": 1}) == Fraction(1, 12)


def test_verify_reports_corruption():
    from griess.data import appendix_a
    table = dict(appendix_a())
    table[(4, (4,))] = table[(4, (4,))] + 1
    rows = verify_appendix_a(4, table)
    bad = [r for r in rows if r.status == "FAIL"]
    assert [r.label for r in bad] == ["A^(4)[4]"]
