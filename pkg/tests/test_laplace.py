from __future__ import annotations

import math
import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intdiff.exact import GaussianRational
from intdiff.laplace import (AsymptoticSeriesWarning, ExpPoly, PolynomialError, RationalFunction,
                             SpectralComb, comb_render, exppoly_str, heat_trace,
                             kernel_to_rational, laplace_forward, laplace_inverse_rational,
                             laplace_roundtrip, laplace_roundtrip_check, spectrum_recover)
from intdiff.laplace import polyexact as P
from intdiff.integrate import RegScheme
from intdiff.oracle import quad_unbounded
from intdiff.powerseries import PowerSeries, series_known

HEAT_TRACE_1_2_AT_1 = 0.503214724408055  # e^-1 + e^-2, frozen from the oracle-free closed form

rates = st.fractions(min_value=-5, max_value=Fraction(-1, 10), max_denominator=10)
weights = st.fractions(min_value=-4, max_value=4, max_denominator=6).filter(lambda w: w != 0)
exppolys = st.lists(st.tuples(weights, st.integers(0, 4), rates), min_size=1, max_size=6).map(
    ExpPoly.from_terms)


@pytest.mark.parametrize("n", [0, 1, 5, 20])
def test_monomial_law(n):
    R = kernel_to_rational(laplace_forward(ExpPoly.from_terms([(1, n, 0)])))
    assert R == RationalFunction((math.factorial(n),), (0,) * (n + 1) + (1,))


def test_forward_at_a_point():
    assert laplace_forward(ExpPoly.from_terms([(1, 0, 2)]), 5) == Fraction(1, 3)
    with pytest.raises(ValueError, match="region of convergence"):
        laplace_forward(ExpPoly.from_terms([(1, 0, 2)]), 1)


def test_forward_matches_quadrature():
    f = ExpPoly.from_terms([(1, 0, -1), (Fraction(1, 2), 2, -2)])
    q = quad_unbounded(lambda y: f(y) * math.exp(-3 * y), "half_line", tol=1e-12)
    assert float(laplace_forward(f, 3)) == pytest.approx(q.value, abs=1e-12)


@pytest.mark.parametrize("a,text", [(-3, "exp(-3*x)"), (0, "1"), (2, "exp(2*x)"),
                                    (GaussianRational(1, 2), "exp((1+2i)*x)")])
def test_inverse_of_simple_pole(a, text):
    f = laplace_inverse_rational(RationalFunction((1,), P.linear(a)))
    assert f == ExpPoly.from_terms([(1, 0, a)])
    assert exppoly_str(f) == text


def test_conjugate_poles_give_real_functions():
    assert exppoly_str(laplace_inverse_rational(RationalFunction((1,), (1, 0, 1)))) == "sin(x)"
    assert exppoly_str(laplace_inverse_rational(RationalFunction((0, 1), (1, 0, 1)))) == "cos(x)"
    f = laplace_inverse_rational(RationalFunction((1,), (5, -2, 1)))
    assert f.is_real()
    assert exppoly_str(f) == "1/2*exp(x)*sin(2*x)"


def test_repeated_pole():
    f = laplace_inverse_rational(RationalFunction((1,), P.pow_(P.linear(-1), 3)))
    assert f == ExpPoly.from_terms([(Fraction(1, 2), 2, -1)])


def test_partial_fractions():
    terms = RationalFunction((1,), (2, 3, 1)).partial_fractions()
    assert {(t.pole, t.order, t.coeff) for t in terms} == {(-1, 1, 1), (-2, 1, -1)}


def test_improper_rational_refused():
    with pytest.raises(ValueError, match="improper"):
        laplace_inverse_rational(RationalFunction((0, 0, 1), (1, 1)))


def test_rational_is_reduced():
    R = RationalFunction((-1, 1), (-1, 0, 1))  # (x-1)/(x^2-1)
    assert R == RationalFunction((1,), (1, 1))


def test_polynomial_roots_and_squarefree():
    assert sorted(P.roots((2, -3, 1))) == [(1, 1), (2, 1)]
    assert P.squarefree((1, -2, 1)) == [((-1, 1), 2)]
    assert P.roots((1,)) == []
    with pytest.raises(PolynomialError):
        P.roots(())


def test_power_series_forward_is_asymptotic():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        v = laplace_forward(series_known("exp", (), 30), 10)
    assert any(issubclass(w.category, AsymptoticSeriesWarning) for w in caught)
    assert v == pytest.approx(1 / 9, rel=1e-9)


def test_polynomial_forward_is_exact():
    assert laplace_forward(PowerSeries((1, 2, 3)), 2, polynomial=True) == pytest.approx(1.75)


def test_roundtrip_check_reports_zero():
    f = ExpPoly.from_terms([(1, 0, -1), (Fraction(1, 2), 2, -2)])
    assert laplace_roundtrip_check(f) == 0


def test_heat_trace_and_recovery():
    spec = SpectralComb(((1, 1), (2, 1)))
    assert heat_trace(spec, 1) == pytest.approx(HEAT_TRACE_1_2_AT_1, abs=1e-15)
    assert spectrum_recover(spec.trace()) == spec


def test_comb_merges_and_validates():
    assert SpectralComb(((2, 1), (1, 3), (2, 4))).lines == ((1, 3), (2, 5))
    with pytest.raises(ValueError):
        SpectralComb(((-1, 1),))


def test_comb_render_mass():
    spec = SpectralComb(((1, 2), (3, Fraction(1, 2))))
    grid = [-2 + 7 * i / 4000 for i in range(4001)]
    vals = comb_render(spec, RegScheme("gaussian", 0.01), grid)
    mass = 7 / 4000 * (math.fsum(vals) - 0.5 * (vals[0] + vals[-1]))
    assert mass == pytest.approx(2.5, abs=1e-6)


@settings(max_examples=30, deadline=None)
@given(exppolys)
def test_roundtrip_is_identity(f):
    assert laplace_roundtrip(f) == f


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=10),
                          st.fractions(min_value=Fraction(1, 4), max_value=5, max_denominator=4)),
                min_size=1, max_size=6))
def test_spectrum_recovery_inverts_trace(lines):
    spec = SpectralComb(tuple(lines))
    assert spectrum_recover(spec.trace()) == spec


small_exppolys = st.lists(st.tuples(weights, st.integers(0, 2), rates), min_size=1, max_size=3).map(
    ExpPoly.from_terms)


@settings(max_examples=20, deadline=None)
@given(small_exppolys, small_exppolys)
def test_forward_is_linear(f, g):
    lhs = kernel_to_rational(laplace_forward(f + g))
    rhs = kernel_to_rational(laplace_forward(f) + laplace_forward(g))
    assert lhs == rhs


def test_random_roundtrips_with_seeded_rng():
    rng = random.Random(7)
    for _ in range(20):
        triples = [(Fraction(rng.randint(1, 9), rng.randint(1, 3)), rng.randint(0, 4),
                    Fraction(rng.randint(-50, -1), 10)) for _ in range(rng.randint(1, 6))]
        f = ExpPoly.from_terms(triples)
        assert laplace_roundtrip(f) == f
