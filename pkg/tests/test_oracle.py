from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intdiff.oracle import EULER_GAMMA, OracleError, quad_finite, quad_unbounded, special_eval


def test_finite_polynomial_is_exact():
    q = quad_finite(lambda x: 3 * x * x, 0, 2)
    assert q.value == pytest.approx(8.0, abs=1e-14)
    assert q.converged


def test_finite_endpoint_singularity():
    q = quad_finite(lambda x: 1 / math.sqrt(x) if x > 0 else 0.0, 0, 1, tol=1e-10)
    assert q.value == pytest.approx(2.0, abs=1e-7)


def test_empty_interval():
    assert quad_finite(math.exp, 1, 1).value == 0


def test_decaying_half_line():
    q = quad_unbounded(lambda x: math.exp(-x * x), "half_line", tol=1e-12)
    assert q.value == pytest.approx(math.sqrt(math.pi) / 2, abs=1e-12)


def test_oscillatory_half_line():
    q = quad_unbounded(lambda x: math.sin(x) / x if x else 1.0, "half_line", tol=1e-11)
    assert q.value == pytest.approx(math.pi / 2, abs=1e-9)


def test_oscillatory_real_line_with_period():
    q = quad_unbounded(lambda x: math.sin(x) ** 5 / x if x else 0.0, "real_line",
                       tol=1e-11, period=2 * math.pi)
    assert q.value == pytest.approx(3 * math.pi / 8, abs=1e-9)


def test_unknown_domain():
    with pytest.raises((OracleError, ValueError)):
        quad_unbounded(math.exp, "upper_half_plane")


def test_special_functions():
    assert special_eval("Ei", 1.0) == pytest.approx(1.895117816355937, abs=1e-14)
    assert -special_eval("Ei", -1.0) == pytest.approx(0.2193839343955205, abs=1e-14)
    assert special_eval("erf", 0.5) == pytest.approx(math.erf(0.5), abs=1e-15)
    assert special_eval("gamma", 5.0) == pytest.approx(24.0)
    assert special_eval("log", -1.0) == pytest.approx(complex(0, math.pi))


def test_ei_near_zero_matches_series():
    x = 1e-6
    assert special_eval("Ei", x) == pytest.approx(EULER_GAMMA + math.log(x) + x, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=-3, max_value=3), st.floats(min_value=-3, max_value=3))
def test_finite_reverses_sign(a, b):
    f = lambda x: math.cos(x) * math.exp(x / 3)
    assert quad_finite(f, a, b).value == pytest.approx(-quad_finite(f, b, a).value, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.2, max_value=5))
def test_exponential_half_line(rate):
    q = quad_unbounded(lambda x: math.exp(-rate * x), "half_line", tol=1e-12)
    assert q.value == pytest.approx(1 / rate, rel=1e-10)


@pytest.mark.parametrize("f,value", [
    (lambda x: math.exp(-x / 20), 20.0),
    (lambda x: 1 / (1 + x) ** 2, 1.0),
    (lambda x: 1 / (1 + x * x), math.pi / 2),
    (lambda x: math.sin(x) ** 2 / x ** 2 if x else 1.0, math.pi / 2),
])
def test_auto_method_choice(f, value):
    # slow same-sign tails go to exp-sinh, oscillating ones to period sums
    assert quad_unbounded(f, "half_line", tol=1e-11).value == pytest.approx(value, abs=1e-8)
