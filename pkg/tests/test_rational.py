"""Field axioms and formatting for exact Gaussian rationals."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sympspin.rational import (GaussianRational, I, ONE, ZERO, rational,
                               format_coefficient)


def gr(a, b=0):
    return GaussianRational(a, b)


small = st.fractions(min_value=-30, max_value=30, max_denominator=12)
gaussians = st.builds(lambda a, b: GaussianRational(a, b), small, small)


def test_basic_products():
    assert gr(1, 1) * gr(1, -1) == gr(2)
    assert 1 / I == -I
    assert gr(Fraction(1, 2), Fraction(1, 3)) + \
        gr(Fraction(1, 2), Fraction(-1, 3)) == ONE


def test_constants():
    assert ZERO + ONE == ONE
    assert I * I == -ONE
    assert not ZERO
    assert ONE


@given(gaussians, gaussians, gaussians)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(gaussians)
def test_field_inverse(a):
    if a:
        assert a / a == ONE
        assert a * (ONE / a) == ONE


@given(gaussians)
def test_conjugate_norm(a):
    norm = a * a.conjugate()
    assert norm.im == 0
    assert (norm.re >= 0) and (bool(norm) == bool(a))


def test_rational_helper():
    assert rational(1, 2) + rational(1, 2) == ONE
    assert rational(-3) == gr(-3)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@pytest.mark.parametrize("value, text", [
    (ONE, "1"),
    (-ONE, "-1"),
    (I, "i"),
    (-I, "-i"),
    (GaussianRational(Fraction(1, 2)), "1/2"),
    (GaussianRational(0, Fraction(2, 3)), "2/3i"),
    (GaussianRational(1, 1), "(1+i)"),
    (GaussianRational(Fraction(1, 2), Fraction(-1, 3)), "(1/2-1/3i)"),
])
def test_format_coefficient(value, text):
    assert format_coefficient(value) == text
