from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intdiff.exact import I
from intdiff.opcalc import (SYMBOLIC, ZERO, ConstantError, ConstantPolicy, DiffOperator, Dist,
                            KernelError, KernelExpr, antiderivative, apply_series_operator,
                            apply_to_exponential, commutator_derivative_check, delta,
                            delta_semigroup, derivative, evaluate, exp_atom, heat, limit_at,
                            operator_matrix, recip, resolvent_apply, shift, theta)
from intdiff.opcalc.regdelta import gaussian_value, sinc_value
from intdiff.oracle import quad_finite
from intdiff.powerseries import PowerSeries, series_known

fractions = st.fractions(min_value=-3, max_value=3, max_denominator=5)


def test_eigenfunction_rule_exact():
    f = DiffOperator(PowerSeries((1, 2, 3)))
    value, expr = apply_to_exponential(f, Fraction(1, 2))
    assert value == 1 + 1 + Fraction(3, 4)
    assert expr == KernelExpr.atom(exp_atom(Fraction(1, 2)))


def test_eigenfunction_rule_with_imaginary_nu():
    value, _ = apply_to_exponential(DiffOperator("exp", nu=I), 2)
    assert complex(value) == pytest.approx(complex(math.cos(2), math.sin(2)))


def test_shift_translates():
    g = shift(KernelExpr.atom(recip()), 2)
    assert evaluate(g, 0) == Fraction(1, 2)


def test_shift_by_exponential_series_is_taylor():
    # e^{d} eps^2 = (eps + 1)^2
    out = apply_series_operator(DiffOperator(series_known("exp", (), 10)),
                                PowerSeries((0, 0, 1) + (0,) * 8))
    assert list(out)[:3] == [1, 2, 1]


def test_polynomial_operator_drops_order():
    out = apply_series_operator(DiffOperator(PowerSeries((0, 1)), polynomial=True),
                                PowerSeries((0, 0, 1)))
    assert list(out) == [0, 2]


def test_symbolic_constant_must_cancel():
    a = antiderivative(KernelExpr.atom(recip()), SYMBOLIC)
    with pytest.raises(ConstantError, match="non-cancelling integration constant"):
        limit_at(a, 1)
    # a difference of two shifts cancels it
    diff = shift(a, 2) - shift(a, 1)
    assert complex(limit_at(diff, 0)) == pytest.approx(math.log(2))


def test_constant_policies():
    g = KernelExpr.atom(recip())
    assert str(antiderivative(g, ZERO)) == "ln(eps)"
    p = antiderivative(g, ConstantPolicy.parse("value=5/2"))
    assert complex(evaluate(p, 1)) == pytest.approx(2.5)
    with pytest.raises(ValueError):
        ConstantPolicy.parse("maybe")


def test_theta_derivative_is_delta():
    assert derivative(KernelExpr.atom(theta())) == KernelExpr.atom(delta())


def test_resolvent_on_delta_is_causal_exponential():
    g = resolvent_apply(2, delta())
    assert float(evaluate(g, 1)) == pytest.approx(math.exp(2))
    assert float(evaluate(g, -1)) == 0


def test_resolvent_rejects_divergent_w_integral():
    with pytest.raises(KernelError):
        resolvent_apply(3, KernelExpr.atom(exp_atom(1)))


def test_heat_on_exponential_is_eigenvalue():
    g = heat(KernelExpr.atom(exp_atom(1)), 2)
    assert float(evaluate(g, 0)) == pytest.approx(math.exp(2))


def test_semigroup_widths_add():
    g = delta_semigroup(Fraction(1, 4), Dist("gaussian", 0, 0, Fraction(1, 4)))
    assert g == delta_semigroup(Fraction(1, 2))


def test_dist_validation():
    with pytest.raises(KernelError):
        Dist("gaussian", 0, 0, -1)
    with pytest.raises(KernelError):
        Dist("sinc", 0, 0, 0, None)
    with pytest.raises(KernelError):
        Dist("lorentz")


@pytest.mark.parametrize("a", [0.01, 0.25, 2.0])
def test_gaussian_delta_has_unit_mass(a):
    q = quad_finite(lambda u: gaussian_value(0, u, a), -40, 40, tol=1e-12)
    assert q.value == pytest.approx(1.0, abs=1e-10)


def test_sinc_delta_peak_and_derivative():
    assert sinc_value(0, 0.0, 3.0) == pytest.approx(3 / math.pi)
    h = 1e-5
    fd = (sinc_value(0, 0.7 + h, 3.0) - sinc_value(0, 0.7 - h, 3.0)) / (2 * h)
    assert sinc_value(1, 0.7, 3.0) == pytest.approx(fd, rel=1e-6)


def test_gaussian_derivative_matches_difference():
    h = 1e-5
    fd = (gaussian_value(0, 0.3 + h, 0.1) - gaussian_value(0, 0.3 - h, 0.1)) / (2 * h)
    assert gaussian_value(1, 0.3, 0.1) == pytest.approx(fd, rel=1e-6)


def test_eps_matrix_is_subdiagonal():
    m = operator_matrix("mult_eps", 4).matrix
    assert np.array_equal(m, np.eye(5, k=-1, dtype=int).astype(object))


@settings(max_examples=15, deadline=None)
@given(st.lists(fractions, min_size=1, max_size=11))
def test_commutator_identity_on_polynomials(coeffs):
    assert commutator_derivative_check(PowerSeries(tuple(coeffs)), 24) == 0


@given(fractions, fractions)
def test_shifts_compose(s, t):
    g = KernelExpr.atom(recip(1)) + KernelExpr.atom(theta()) + KernelExpr.atom(Dist("gaussian", 0, 0, 1))
    assert shift(shift(g, s), t) == shift(g, s + t)


@given(fractions.filter(lambda a: a != 0))
def test_derivative_undoes_antiderivative(a):
    g = KernelExpr.atom(exp_atom(a))
    assert derivative(antiderivative(g, ZERO)) == g
