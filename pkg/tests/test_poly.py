"""Sparse spinor polynomials: ring operations, grading, text form."""

import pytest
from hypothesis import given, settings, strategies as st

from sympspin import Monomial, RankMismatchError, SpinorPoly
from sympspin.rational import GaussianRational, I, ONE, rational


def x(m, rank=2):
    return SpinorPoly.x(m, rank)


def q(j, rank=2):
    return SpinorPoly.q(j, rank)


small = st.fractions(min_value=-9, max_value=9, max_denominator=4)
coeffs = st.builds(lambda a, b: GaussianRational(a, b), small, small)
monos = st.builds(
    lambda xe, qe: Monomial(tuple(xe), tuple(qe)),
    st.lists(st.integers(0, 3), min_size=4, max_size=4),
    st.lists(st.integers(0, 3), min_size=2, max_size=2))
polys = st.builds(
    lambda pairs: SpinorPoly(2, dict(pairs)),
    st.lists(st.tuples(monos, coeffs), max_size=5))


def test_trivial_identities():
    p = x(1) * x(2) + q(1).scale(I)
    assert (p + p.scale(-1)).is_zero()
    assert p + SpinorPoly.zero(2).scale(rational(7)) == p
    assert x(1) + x(1).scale(I) == x(1).scale(GaussianRational(1, 1))
    assert p * SpinorPoly.one(2) == p
    assert q(1) * q(1) == SpinorPoly.from_monomial(
        Monomial((0, 0, 0, 0), (2, 0)))


def test_binomial_square():
    p = x(2) + x(4).scale(I)
    sq = p * p
    expect = x(2) * x(2) + (x(2) * x(4)).scale(GaussianRational(0, 2)) \
        - x(4) * x(4)
    assert sq == expect


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_axioms(p, r, s):
    assert (p + r) + s == p + (r + s)
    assert p + r == r + p
    assert p * (r + s) == p * r + p * s
    assert (p * r) * s == p * (r * s)
    assert p * r == r * p


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        SpinorPoly.one(1) + SpinorPoly.one(2)
    with pytest.raises(RankMismatchError):
        SpinorPoly.one(1) * SpinorPoly.one(2)


def test_grading():
    p = x(1) * x(3) * q(2) + q(1) * q(2) * q(2)
    assert p.xdeg() == 2
    assert p.qdeg() == 3


def test_zero_degrees():
    z = SpinorPoly.zero(2)
    # degree of the zero polynomial is the sentinel -1
    assert z.xdeg() == -1 and z.qdeg() == -1 and z.is_zero()


def test_text_ordering():
    p = q(1) + x(1) * x(2) + x(3)
    # graded ordering: highest monomial printed first
    assert p.text() == "x1*x2 + x3 + q1"
    assert SpinorPoly.zero(2).text() == "0"


def test_canonical_no_zero_terms():
    p = x(1) - x(1)
    assert p.terms == {}
    assert p == SpinorPoly.zero(2)
