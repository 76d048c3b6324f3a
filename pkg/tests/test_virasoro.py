from fractions import Fraction

import pytest

from griess.errors import DegreeMismatch, DegreeUnderflow, UnsupportedDegree
from griess.exact import C, Poly
from griess.virasoro import (
    PBWVector, apply_mode, apply_raising, d_factors, d_polynomial, gram_determinant, gram_matrix,
    partitions, vacuum_mode_word,
)


def test_partition_counts():
    # partitions into parts >= 2 (L(-1)|0> = 0 in the quotient)
    assert [len(partitions(m)) for m in range(11)] == [1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12]
    assert partitions(4) == [(4,), (2, 2)]


def test_gram_degree_2_and_4():
    assert gram_matrix(2) == [[Poly.parse("(1/2)*c")]]
    g = gram_matrix(4)
    assert g[0][0] == 5 * C
    assert g[0][1] == g[1][0] == 3 * C
    assert g[1][1] == Poly.parse("(1/2)*c^2+4*c")
    assert gram_determinant(4) == Poly.parse("(1/2)*c^2*(5*c+22)")


def test_d_polynomial_closed_forms():
    assert d_polynomial(2) == C
    assert d_polynomial(4) == C * (5 * C + 22)
    assert d_polynomial(6) == Poly.parse("c*(5*c+22)*(2*c-1)*(7*c+68)")
    assert d_polynomial(10) == Poly.parse("c*(5*c+22)*(2*c-1)*(7*c+68)*(3*c+46)*(5*c+3)*(11*c+232)")
    with pytest.raises(UnsupportedDegree):
        d_polynomial(12)


@pytest.mark.parametrize("m", [2, 4, 6, 8])
def test_gram_determinant_vanishes_on_factors(m):
    det = gram_determinant(m)
    for f in d_factors(m):
        (a, b), = [(f.terms.get((1, 0, 0), 0), f.terms.get((0, 0, 0), 0))]
        root = -Fraction(b) / Fraction(a)
        assert det.subs(c=root).is_zero()


def test_vacuum_mode_word():
    assert vacuum_mode_word([2, -2]) == Poly.parse("(1/2)*c")
    assert vacuum_mode_word([2, 0, -2]) == C
    assert vacuum_mode_word([]) == Poly.const(1)
    with pytest.raises(DegreeMismatch):
        vacuum_mode_word([2, -3])


def test_apply_mode_l0_and_raising():
    v = PBWVector.basis((3, 2))
    assert apply_mode(0, v).coeffs == {(3, 2): Poly.const(5)}
    with pytest.raises(DegreeUnderflow):
        apply_raising(6, v)
    with pytest.raises(ValueError):
        apply_raising(0, v)
    # L(-1) kills the vacuum in the quotient
    assert apply_mode(-1, PBWVector.vacuum()).coeffs == {}


def test_degree_cap():
    with pytest.raises(UnsupportedDegree):
        gram_matrix(11)
