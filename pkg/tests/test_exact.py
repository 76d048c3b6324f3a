from fractions import Fraction

import pytest

from griess.errors import NotDivisible, ParseError, SingularMatrix, ZeroDenominator
from griess.exact import (
    C, D, H, ONE, Poly, RatFunc, ZERO, as_fraction, bareiss_solve, determinant, fmt_rational,
    linsolve, rational_roots,
)


def test_parse_factored_form_expands():
    p = Poly.parse("2*h*(5*h+1)*d")
    assert str(p) == "10*d*h^2+2*d*h"
    assert p == 2 * H * (5 * H + 1) * D


def test_print_parse_roundtrip_with_fractions():
    p = Poly.parse("(-1/2)*h*d*(60*c^5+3)") + Fraction(7, 3)
    assert Poly.parse(str(p)) == p
    assert "(7/3)" in str(p)


def test_printing_conventions():
    assert str(C) == "c"
    assert str(C ** 2 * D) == "c^2*d"
    assert str(ZERO) == "0"
    assert str(-C + 1) == "-c+1"


@pytest.mark.parametrize("text", ["2*x", "c^", "(c+1", "c**2", "3/0*c"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        Poly.parse(text)


def test_eval_and_subs():
    p = Poly.parse("c^2-2*d*h+1")
    assert p.eval({"c": 3, "d": Fraction(1, 2), "h": 4}) == 6
    assert p.subs(c=D) == Poly.parse("d^2-2*d*h+1")


def test_division():
    p = (C + 1) * (5 * C + 22) * D
    assert p.divexact(5 * C + 22) == (C + 1) * D
    q, r = (C ** 2 + 1).divmod(C + 1)
    assert q * (C + 1) + r == C ** 2 + 1
    with pytest.raises(NotDivisible):
        (C ** 2 + 1).divexact(C + 1)


def test_ratfunc_normalizes():
    r = RatFunc((C + 1) * (C - 2), 2 * (C - 2) * C)
    assert r == RatFunc(C + 1, 2 * C)
    assert r.den.leading()[1] == 1           # monic denominator
    assert str(RatFunc(C, C)) == "(1)/(1)" or RatFunc(C, C) == RatFunc(ONE)
    with pytest.raises(ZeroDenominator):
        RatFunc(C, ZERO)


def test_ratfunc_arith_and_eval():
    a = RatFunc(ONE, C)
    b = RatFunc(ONE, C + 1)
    assert a - b == RatFunc(ONE, C * (C + 1))
    assert (a / b).eval({"c": 2}) == Fraction(3, 2)


def test_linsolve_vandermonde_baby_monster():
    nodes = [Fraction(0), Fraction(1, 10), Fraction(3, 5), Fraction(3, 2)]
    matrix = [[Fraction(1) if j == 0 else x ** j for x in nodes] for j in range(4)]
    rhs = [4371, Fraction(1953, 10), Fraction(2163, 100), Fraction(5313, 1000)]
    sol = linsolve(matrix, rhs)
    assert [s.eval({}) for s in sol] == [2432, 1938, 0, 1]


def test_linsolve_symbolic():
    sol = linsolve([[C, 1], [1, -1]], [D, 0])
    assert sol[0] == RatFunc(D, C + 1)
    assert sol[1] == RatFunc(D, C + 1)


def test_bareiss_diagonal_is_det():
    m = [[C, 1, 0], [1, C, 1], [0, 1, C]]
    nums, det = bareiss_solve(m, [1, 0, 0])
    assert det == determinant(m) == C ** 3 - 2 * C


def test_singular():
    with pytest.raises(SingularMatrix):
        bareiss_solve([[C, C], [1, 1]], [1, 2])
    assert determinant([[C, C], [1, 1]]) == ZERO


def test_rational_roots():
    p = Poly.parse("(2*c-47)*(10*c-7)*(82*c-37)")
    assert rational_roots(p, "c") == [Fraction(37, 82), Fraction(7, 10), Fraction(47, 2)]
    assert rational_roots(C * (C ** 2 + 1)) == [0]
    with pytest.raises(ValueError):
        rational_roots(C * D)


def test_as_fraction_and_fmt():
    assert as_fraction("47/2") == Fraction(47, 2)
    assert fmt_rational(Fraction(4, 2)) == "2"
    assert fmt_rational(Fraction(-1, 3)) == "-1/3"
