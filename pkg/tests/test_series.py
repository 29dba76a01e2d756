"""Truncated power series and graded-polynomial arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nesthilb.series import (
    GradedPoly,
    Series2,
    binomial_factor_series,
    linear_power,
    product_formula,
)

CAP = 5

unit_series = st.dictionaries(
    st.tuples(st.integers(0, CAP), st.integers(0, CAP)),
    st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)),
    max_size=5,
).map(lambda t: Series2(CAP, {**t, (0, 0): 1}))

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@given(unit_series, rationals, rationals)
@settings(max_examples=60)
def test_pow_is_additive_in_the_exponent(s, r1, r2):
    assert s.pow(r1) * s.pow(r2) == s.pow(r1 + r2)


@given(unit_series, rationals)
@settings(max_examples=60)
def test_pow_inverse(s, r):
    assert s.pow(r) * s.pow(-r) == Series2.one(CAP)


@given(unit_series)
def test_exp_log_roundtrip(s):
    assert s.log().exp() == s


def test_pow_requires_unit():
    s = Series2(3, {(1, 0): 1})
    with pytest.raises(ValueError):
        s.pow(Fraction(1, 2))


def test_binomial_factor_integer_exponent():
    s = binomial_factor_series(1, 0, 2, 4)
    # (1 - q1)^2 = 1 - 2 q1 + q1^2
    assert s == Series2(4, {(0, 0): 1, (1, 0): -2, (2, 0): 1})


def test_product_formula_single_family():
    # prod (1 - q^n)^-1 on the diagonal: partition counts 1,1,2,3,5,7
    s = product_formula([((1, 1), -1)], 10)
    for n, p in enumerate([1, 1, 2, 3, 5]):
        assert s.coeff(n, n) == p


def test_product_formula_rejects_constant_factor():
    with pytest.raises(ValueError):
        product_formula([((0, 0), 1)], 3)


# ---------------------------------------------------------------------------
# graded polynomials


def test_linear_power_positive():
    g = linear_power(Fraction(3), 2, 4)
    assert g.coeffs[:3] == [Fraction(1), Fraction(6), Fraction(9)]
    assert g.coeffs[3] == 0


def test_linear_power_negative_is_inverse():
    w = Fraction(5, 2)
    a = linear_power(w, 3, 6)
    b = linear_power(w, -3, 6)
    assert a * b == GradedPoly.one(6)


def test_divide_roundtrip():
    a = GradedPoly(4, [1, 2, 3, 4, 5])
    b = GradedPoly(4, [1, -1, 7, 0, 2])
    assert a.divide(b) * b == a


def test_divide_requires_unit():
    a = GradedPoly(2, [1, 1, 1])
    b = GradedPoly(2, [0, 1, 0])
    with pytest.raises(ValueError):
        a.divide(b)
