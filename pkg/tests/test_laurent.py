"""Ring-level properties of the exact Laurent polynomial arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nesthilb.laurent import LaurentPoly

exponents = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
coeffs = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 8))
polys = st.dictionaries(exponents, coeffs, max_size=6).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys)
def test_additive_inverse(a):
    assert a - a == LaurentPoly.zero()
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a


@given(polys, polys)
def test_bar_is_multiplicative(a, b):
    # bar inverts every torus weight, so it is a ring involution
    assert (a * b).bar() == a.bar() * b.bar()
    assert a.bar().bar() == a


@given(polys, exponents)
def test_shift_is_monomial_multiplication(a, m):
    assert a.shift(m) == a * LaurentPoly.monomial(*m)


@given(polys)
def test_rank_is_evaluation_at_one(a):
    assert a.rank() == sum(a.terms.values())


@given(polys, st.integers(0, 4))
def test_power_matches_repeated_product(a, n):
    expected = LaurentPoly.one()
    for _ in range(n):
        expected = expected * a
    assert a**n == expected


@settings(max_examples=60)
@given(polys, st.dictionaries(exponents, st.integers(-5, 5), min_size=1, max_size=4))
def test_exact_division_roundtrip(q, d_terms):
    divisor = LaurentPoly(d_terms)
    if not divisor.terms:
        return
    product = q * divisor
    assert product.divide_exact(divisor) == q


def test_division_rejects_inexact():
    # t1 + t2 is not divisible by 1 - t1
    a = LaurentPoly({(1, 0): 1, (0, 1): 1})
    d = LaurentPoly({(0, 0): 1, (1, 0): -1})
    with pytest.raises(ValueError):
        a.divide_exact(d)


def test_substitute_composes_weights():
    a = LaurentPoly({(1, 0): 1, (0, 1): 1, (1, 1): Fraction(1, 2)})
    # t1 -> t^(2,-1), t2 -> t^(0,1)
    out = a.substitute((2, -1), (0, 1))
    assert out == LaurentPoly({(2, -1): 1, (0, 1): 1, (2, 0): Fraction(1, 2)})
