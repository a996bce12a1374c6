from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypheron.exactnum import (
    GaussRat,
    format_gauss,
    format_rat,
    format_scalar,
    half_tangent_from_unit,
    is_square,
    parse_gauss,
    parse_rat,
    parse_scalar,
    rat_height,
    rat_sqrt,
    unit_from_half_tangent,
)

rats = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**9)
gauss = st.builds(GaussRat, rats, rats)


@given(rats)
def test_rat_text_roundtrip(q):
    assert parse_rat(format_rat(q)) == q


@pytest.mark.parametrize("bad", ["0.5", "1e3", "", "1/0", "a/b", "1//2"])
def test_parse_rat_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rat(bad)


def test_parse_rat_normalizes():
    assert parse_rat("-6/4") == Fraction(-3, 2)
    assert parse_rat(" 7 ") == 7


@given(rats)
def test_rat_sqrt_of_square(q):
    assert rat_sqrt(q * q) == abs(q)
    assert is_square(q * q)


def test_rat_sqrt_nonsquare():
    assert rat_sqrt(Fraction(2)) is None
    assert rat_sqrt(Fraction(-4)) is None
    assert rat_sqrt(Fraction(9, 8)) is None
    assert rat_sqrt(Fraction(341, 64)) is None


def test_height():
    assert rat_height(Fraction(-45, 16)) == 45
    assert rat_height(Fraction(3, 7)) == 7


@given(gauss, gauss, gauss)
def test_gauss_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if b != 0:
        assert (a / b) * b == a


@given(gauss, gauss)
def test_gauss_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert a * a.conj() == a.norm()


@given(gauss)
def test_gauss_text_roundtrip(z):
    assert parse_gauss(format_gauss(z)) == z
    assert parse_scalar(format_scalar(z)) == z


def test_gauss_mixed_with_fraction():
    z = GaussRat(1, 2)
    assert 1 - z == GaussRat(0, -2)
    assert 2 / GaussRat(0, 1) == GaussRat(0, -2)
    assert GaussRat(Fraction(3, 4)) == Fraction(3, 4)
    assert hash(GaussRat(Fraction(3, 4))) == hash(Fraction(3, 4))
    assert z**-1 * z == 1


def test_parse_gauss_forms():
    assert parse_gauss("-3i/4") == GaussRat(0, Fraction(-3, 4))
    assert parse_gauss("140i") == GaussRat(0, 140)
    assert parse_gauss("1/2-3/4i") == GaussRat(Fraction(1, 2), Fraction(-3, 4))
    assert parse_gauss("5") == 5
    assert parse_gauss("2+i/3") == GaussRat(2, Fraction(1, 3))


@given(rats)
def test_half_tangent_unit_roundtrip(t):
    z = unit_from_half_tangent(t)
    assert z.norm() == 1
    assert half_tangent_from_unit(z) == t


def test_unit_product_fixture():
    z = unit_from_half_tangent(Fraction(1, 2)) * unit_from_half_tangent(Fraction(1, 4))
    assert unit_from_half_tangent(Fraction(1, 2)) == GaussRat(Fraction(3, 5), Fraction(4, 5))
    assert z == GaussRat(Fraction(13, 85), Fraction(84, 85))


def test_half_tangent_at_minus_one():
    with pytest.raises(ZeroDivisionError):
        half_tangent_from_unit(GaussRat(-1))
