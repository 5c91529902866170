from fractions import Fraction

import pytest

from gpw.scalars import (
    MultiPoly,
    ScalarParseError,
    format_rational,
    parse_rational,
    poly_is_zero,
    rat,
    rat_add,
    rat_inv,
)


def test_rational_arithmetic():
    assert rat_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert rat(Fraction(2, 4)) == Fraction(1, 2)
    q = rat_inv(Fraction(-3, 7))
    assert q == Fraction(-7, 3) and q.denominator == 3
    with pytest.raises(ZeroDivisionError):
        rat_inv(0)


def test_parse_and_format():
    assert parse_rational("-2/4") == Fraction(-1, 2)
    assert parse_rational(" 7 ") == 7
    assert format_rational(Fraction(3, 1)) == "3"
    assert format_rational(Fraction(-2, 3)) == "-2/3"
    with pytest.raises(ScalarParseError):
        parse_rational("1.5")
    with pytest.raises(ScalarParseError):
        parse_rational("1/0")


def test_multipoly():
    t1, t2 = MultiPoly.var(1), MultiPoly.var(2)
    assert t1 * t2 + t2 * t1 == MultiPoly.var(1) * MultiPoly.var(2) * 2
    p = t1 * 3 - t2
    assert poly_is_zero(p + (-p))
    sq = (t1 + t2) * (t1 + t2)
    assert sorted(c for _, c in sq.sorted_terms()) == [1, 1, 2]
    assert str(t1 * t2 * 2) == "2*t1*t2"
