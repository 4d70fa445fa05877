from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intdiff.cli.expr import parse_expression
from intdiff.cli.lower import lower_kernel
from intdiff.integrate import (IntegralResult, RegScheme, accelerate_partial_sums,
                               consecutive_decreases, exp_term, fourier_transform,
                               integrate_finite, integrate_finite_kernel, integrate_finite_split,
                               integrate_half_line, integrate_real_line, real_line_pieces,
                               richardson, series_partial_sums, sinc_kernel)
from intdiff.opcalc import ConstantError, ConstantPolicy, DivergentError, KernelError
from intdiff.powerseries import PowerSeries, SeriesError, series_known

PI = math.pi


def kernel(text):
    return lower_kernel(parse_expression(text), "x")


# values below were computed with the quadrature oracle and frozen
SI_1 = 0.9460830703671831            # int_0^1 sin(x)/x
GAUSS_0_1 = 0.746824132812427        # int_0^1 exp(-x^2)
COS_GAUSS_R = 1.3803884470431431     # int_R cos(x) exp(-x^2)
FT_GAUSS_AT_1 = 0.5506953149031839   # Fourier transform of exp(-y^2) at x = 1
HALF_XEXP_SIN = 0.5                  # int_0^inf x exp(-x) sin(x)


def test_half_line_sinc_is_exact():
    res = integrate_half_line(sinc_kernel())
    assert res.value == pytest.approx(PI / 2, abs=1e-15)
    assert res.tail == 0.0 and res.route == "half-line"


def test_half_line_negative_side_by_reflection():
    res = integrate_half_line(kernel("exp(x)"), "negative")
    assert res.value == pytest.approx(1.0)


def test_half_line_derived_value():
    assert integrate_half_line(kernel("x*exp(-x)*sin(x)")).value == pytest.approx(HALF_XEXP_SIN, abs=1e-14)


def test_half_line_needs_decay():
    with pytest.raises(DivergentError):
        integrate_half_line(kernel("exp(x)"))


@pytest.mark.parametrize("text,value", [
    ("sin(x)/x", PI),
    ("sin(x)^5/x", 3 * PI / 8),
    ("sin(x)^2/x^2", PI),
    ("(1-cos(3*x))/x^2", 3 * PI),
    ("x^2*cos(x)*exp(-x^2)", math.sqrt(PI) * math.exp(-0.25) / 4),
    ("cos(x)*exp(-x^2)", COS_GAUSS_R),
])
def test_real_line_exact_atoms(text, value):
    res = integrate_real_line(kernel(text))
    assert res.value == pytest.approx(value, abs=1e-12)
    assert res.verified


def test_real_line_exact_text():
    assert integrate_real_line(kernel("sin(x)/x")).exact == "1*pi"


@pytest.mark.parametrize("text", ["sin(x)/x", "sin(x)^2/x^2", "x^2*cos(x)*exp(-x^2)"])
def test_routes_agree(text):
    k = kernel(text)
    ref = integrate_real_line(k).value
    if not k.has_gaussian:  # half-lines use nu = -1, where a Gaussian factor is a backward heat flow
        assert integrate_real_line(k, "two-sided").value == pytest.approx(ref, abs=1e-6)
    assert integrate_real_line(k, "w").value == pytest.approx(ref, abs=1e-6)


@pytest.mark.parametrize("shape", ["gaussian", "sinc"])
def test_regularized_schedules(shape):
    k = kernel("sin(x)^2/x^2")
    res = integrate_real_line(k, "delta", RegScheme.for_integrand(shape, k))
    assert res.value == pytest.approx(PI, abs=1e-6)
    deltas = [r.delta_prev for r in res.diagnostics["steps"][1:]]
    assert consecutive_decreases(deltas) >= 2


def test_w_route_is_eps_independent():
    res = integrate_real_line(sinc_kernel(), "w")
    assert res.diagnostics["spread"] <= 1e-6
    assert set(res.diagnostics["per_eps"]) == {"-0.5", "0", "0.3", "1"}


def test_w_route_refuses_gaussian_window():
    with pytest.raises(ValueError):
        integrate_real_line(sinc_kernel(), "w", RegScheme("gaussian", 0.1))


def test_divergent_integrand_rejected():
    with pytest.raises((KernelError, DivergentError)):
        integrate_real_line(kernel("1/x^2"))


def test_finite_kernel_route():
    assert integrate_finite_kernel(kernel("sin(x)/x"), 0, 1).value == pytest.approx(SI_1, abs=1e-14)
    assert integrate_finite_kernel(kernel("exp(-x)"), 0, 2).value == pytest.approx(1 - math.exp(-2))
    assert integrate_finite_kernel(kernel("exp(x)"), 1, 1).value == 0


def test_pole_inside_interval_needs_prescription():
    with pytest.raises(ConstantError, match="pole prescription required"):
        integrate_finite_kernel(kernel("1/x"), -1, 1)
    a = integrate_finite_kernel(kernel("1/x"), -1, 1, ConstantPolicy.parse("value=0")).value
    b = integrate_finite_kernel(kernel("1/x"), -1, 1, ConstantPolicy.parse("value=7/4")).value
    assert b - a == pytest.approx(1.75)


def test_gaussian_factor_needs_imaginary_nu():
    with pytest.raises(KernelError):
        integrate_finite_kernel(kernel("exp(-x^2)"), 0, 1)


def test_finite_series_route():
    res = integrate_finite("gaussian", 0, 1, tol=1e-13)
    assert res.value == pytest.approx(GAUSS_0_1, abs=1e-14)
    assert res.verified


def test_series_boundary_uses_acceleration():
    res = integrate_finite("geometric", -1, 1, order=200)
    assert res.diagnostics["convergence"] == "boundary"
    assert res.value == pytest.approx(PI / 2, abs=1e-6)


def test_series_outside_disc_asks_for_split():
    with pytest.raises(SeriesError, match="split the interval"):
        integrate_finite(series_known("geometric", (), 40), 0, 2)


def test_split_gives_full_line():
    res = integrate_finite_split("geometric", real_line_pieces(), order=200)
    assert res.value == pytest.approx(PI, abs=1e-6)
    assert len(res.diagnostics["pieces"]) == 3


def test_partial_sums_are_twice_leibniz():
    sums = series_partial_sums("geometric", -1, 1, 10)
    assert sums[4] == 2 * (1 - Fraction(1, 3) + Fraction(1, 5))


def test_series_on_real_line_needs_entire_function():
    res = integrate_real_line(series_known("gaussian", (), 400))
    assert res.value == pytest.approx(math.sqrt(PI), abs=1e-8)
    assert integrate_real_line("gaussian").value == pytest.approx(math.sqrt(PI), abs=1e-8)
    with pytest.raises(KernelError, match="order too low"):
        integrate_real_line(series_known("gaussian", (), 200))
    with pytest.raises(KernelError):
        integrate_real_line(series_known("geometric", (), 40))


def test_fourier_transform_values():
    assert fourier_transform(kernel("exp(-x^2)"), 1).value == pytest.approx(FT_GAUSS_AT_1, abs=1e-14)
    # zero frequency recovers the integral
    ft0 = fourier_transform(sinc_kernel(), 0).value
    assert math.sqrt(2 * PI) * ft0 == pytest.approx(PI, abs=1e-12)
    assert fourier_transform(sinc_kernel(), 2).value == pytest.approx(0, abs=1e-15)


def test_fourier_transform_regularized():
    k = kernel("exp(-x^2/2)")
    res = fourier_transform(k, Fraction(1, 2), RegScheme.for_integrand("gaussian", k))
    assert res.value == pytest.approx(math.exp(-1 / 8), abs=1e-6)


def test_richardson_removes_linear_error():
    hs = [0.1, 0.05, 0.025]
    ex = richardson(hs, [2 + 3 * h for h in hs])
    assert ex.value == pytest.approx(2, abs=1e-12)
    assert len(ex.rows) == 3


def test_richardson_flags_divergence():
    with pytest.raises(DivergentError):
        richardson([1, 0.5, 0.25, 0.125], [1, 1e3, 1e6, 1e9])


def test_aitken_accelerates_leibniz():
    sums = [4 * sum(Fraction((-1) ** k, 2 * k + 1) for k in range(n + 1)) for n in range(20)]
    est, err, levels = accelerate_partial_sums(sums)
    assert abs(est - PI) < 1e-10 and levels > 0


def test_result_validates_route():
    with pytest.raises(ValueError):
        IntegralResult(1.0, "guesswork")


def test_regscheme_validation():
    with pytest.raises(ValueError):
        RegScheme("gaussian", 0.1, 2.0)
    with pytest.raises(ValueError):
        RegScheme("sinc", 10.0, 0.5)


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=4),
       st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_finite_routes_agree_on_exponentials(a, b):
    k = exp_term(Fraction(1, 2))
    by_kernel = integrate_finite_kernel(k, a, b).value
    by_series = integrate_finite("exp", a, b, order=None, params=(Fraction(1, 2),), tol=1e-13).value
    assert by_kernel == pytest.approx(by_series, abs=1e-11)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=1, max_size=8),
       st.fractions(min_value=-2, max_value=2, max_denominator=3))
def test_interval_additivity_exact(coeffs, c):
    f = PowerSeries(tuple(coeffs))
    whole = integrate_finite(f, -2, 2, radius=math.inf).diagnostics.get("partial_sum", 0)
    left = integrate_finite(f, -2, c, radius=math.inf).diagnostics.get("partial_sum", 0)
    right = integrate_finite(f, c, 2, radius=math.inf).diagnostics.get("partial_sum", 0)
    assert left + right == whole
