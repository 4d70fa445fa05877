from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intdiff.powerseries import (PowerSeries, SeriesError, antiderivative, differentiate,
                                 radius_estimate, series_arith, series_calculus, series_divide,
                                 series_eval, series_known, series_power, series_reciprocal,
                                 taylor_shift)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def exact_series(min_size=1, max_size=8):
    return st.lists(fractions, min_size=min_size, max_size=max_size).map(lambda c: PowerSeries(tuple(c)))


def test_exp_coefficients_are_exact_reciprocal_factorials():
    e = series_known("exp", (), 10)
    assert e.is_exact
    assert list(e) == [Fraction(1, math.factorial(n)) for n in range(11)]


def test_sin_cos_with_rate():
    s = series_known("sin", (2,), 5)
    assert list(s) == [0, 2, 0, Fraction(-8, 6), 0, Fraction(32, 120)]
    c = series_known("cos", (), 4)
    assert list(c) == [1, 0, Fraction(-1, 2), 0, Fraction(1, 24)]


def test_geometric_is_one_over_one_plus_x_squared():
    g = series_known("geometric", (), 6)
    assert list(g) == [1, 0, -1, 0, 1, 0, -1]


def test_sin_squared_plus_cos_squared():
    s, c = series_known("sin", (), 20), series_known("cos", (), 20)
    one = s * s + c * c
    assert list(one) == [1] + [0] * 20


def test_product_truncates_to_lower_order():
    a = PowerSeries((1, 1, 1))
    b = PowerSeries((1, 2))
    assert (a * b).order == 1


def test_reciprocal_of_one_minus_x():
    r = series_reciprocal(PowerSeries((1, -1, 0, 0, 0)))
    assert list(r) == [1, 1, 1, 1, 1]


def test_reciprocal_needs_nonzero_constant():
    with pytest.raises(SeriesError):
        series_reciprocal(PowerSeries((0, 1)))


def test_divide_sin_by_cos_gives_tan():
    t = series_divide(series_known("sin", (), 7), series_known("cos", (), 7))
    assert list(t)[:8] == [0, 1, 0, Fraction(1, 3), 0, Fraction(2, 15), 0, Fraction(17, 315)]


def test_power():
    p = series_power(PowerSeries((1, 1, 0, 0)), 3)
    assert list(p) == [1, 3, 3, 1]


def test_calculus_pair():
    e = series_known("exp", (), 8)
    assert list(differentiate(e)) == list(e)[:8]
    assert series_calculus("antiderivative", PowerSeries((1, 2)))[2] == 1
    with pytest.raises(SeriesError):
        series_calculus("curl", e)


def test_eval_and_tail():
    e = series_known("exp", (), 30)
    value, tail = series_eval(e, Fraction(1, 2))
    assert abs(float(value) - math.exp(0.5)) < 1e-15
    assert tail < 1e-20


def test_radius_estimates():
    assert radius_estimate(series_known("geometric", (), 40)) == pytest.approx(1.0, rel=1e-2)
    assert radius_estimate(series_known("exp", (), 40)) > 30


def test_taylor_shift_recenters():
    h = taylor_shift(PowerSeries((1, 2, 3)), 1)
    assert list(h) == [6, 8, 3]
    assert h.center == 1


def test_truncate_cannot_raise_order():
    with pytest.raises(SeriesError):
        PowerSeries((1, 2)).truncate(3)


def test_mismatched_centers_rejected():
    with pytest.raises(SeriesError):
        series_arith("add", PowerSeries((1,), 0), PowerSeries((1,), 1))


@given(exact_series(), exact_series())
def test_product_commutes(a, b):
    assert list(a * b) == list(b * a)


@given(exact_series(min_size=2), exact_series(min_size=2))
def test_leibniz_rule(a, b):
    n = min(a.order, b.order)
    a, b = a.truncate(n), b.truncate(n)
    lhs = differentiate(a * b)
    rhs = differentiate(a) * b.truncate(n - 1) + a.truncate(n - 1) * differentiate(b)
    assert list(lhs) == list(rhs)


@given(exact_series())
def test_differentiate_undoes_antiderivative(a):
    assert list(differentiate(antiderivative(a))) == list(a)


@settings(max_examples=50)
@given(exact_series().filter(lambda s: s[0] != 0))
def test_reciprocal_is_inverse(a):
    assert list(a * series_reciprocal(a)) == [1] + [0] * a.order


@given(exact_series(), fractions)
def test_evaluation_is_linear(a, x):
    assert (a * 3)(x) == 3 * a(x)
