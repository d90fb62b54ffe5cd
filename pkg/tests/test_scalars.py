"""Field arithmetic in Q(i)."""

import pytest

from hnkit import GaussianRational, I, ONE, ZERO
from hnkit.scalars import Rational


def g(re=0, im=0):
    return GaussianRational(re, im)


def test_construction_lowest_terms():
    half = GaussianRational(Rational(2, 4))
    assert half.re == Rational(1, 2)
    assert GaussianRational("2/4", "6/4") == g(Rational(1, 2), Rational(3, 2))


def test_basic_arithmetic():
    assert g(1, 1) + g(2, -3) == g(3, -2)
    assert g(1, 1) - g(1, 1) == ZERO
    assert g(1, 1) * g(1, -1) == g(2)
    assert I * I == g(-1)
    assert -g(2, -5) == g(-2, 5)


def test_division_and_inverse():
    assert g(1) / I == -I
    assert (g(3, 4) / g(3, 4)) == ONE
    quotient = g(1, 1) / g(2)
    assert quotient == g(Rational(1, 2), Rational(1, 2))
    with pytest.raises(ZeroDivisionError):
        g(1) / ZERO


def test_powers():
    assert I**2 == g(-1)
    assert I**0 == ONE
    assert g(1, 1) ** 2 == g(0, 2)
    assert g(0, 2) ** -1 == g(0, Rational(-1, 2))


def test_int_interop_and_hash():
    assert g(5) == 5
    assert 5 == g(5)
    assert g(5, 1) != 5
    assert hash(g(5)) == hash(5)
    assert hash(g(Rational(1, 2))) == hash(Rational(1, 2))
    assert g(2) * 3 == g(6)
    assert 3 * g(2) == g(6)
    assert 1 + g(0, 1) == g(1, 1)


def test_conjugate_and_norm():
    assert g(3, 4).conjugate() == g(3, -4)
    assert g(3, 4).norm() == 25
    assert bool(ZERO) is False
    assert ZERO.is_zero()
    assert bool(I) is True


def test_str_forms():
    assert str(ZERO) == "0"
    assert str(g(5)) == "5"
    assert str(g(Rational(-3, 4))) == "-3/4"
    assert str(I) == "i"
    assert str(-I) == "-i"
    assert str(g(0, 3)) == "3i"
    assert str(g(Rational(1, 2), 3)) == "1/2+3i"
    assert str(g(1, -1)) == "1-i"
    assert str(g(-1, Rational(-2, 3))) == "-1-2/3i"
