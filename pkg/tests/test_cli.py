from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intdiff.acceptance import run_cli
from intdiff.cli import (ExprSyntaxError, LoweringError, RunConfig, lower_exppoly, lower_kernel,
                         lower_rational, lower_series, numeric_function, parse_expression,
                         run_command, to_text)
from intdiff.cli.config import parse_param
from intdiff.cli.expr import Num, substitute
from intdiff.cli.report import CSV_COLUMNS

PI = math.pi


# expression parser ----------------------------------------------------------

def test_precedence_and_associativity():
    assert to_text(parse_expression("2^3^2")) == "2^3^2"
    e = parse_expression("-x^2")
    assert numeric_function(e, "x")(3.0) == -9.0
    assert numeric_function(parse_expression("1-2-3+x*2/4"), "x")(2.0) == -3.0


def test_syntax_error_offsets():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expression("sin(")
    assert info.value.offset == 4
    with pytest.raises(ExprSyntaxError):
        parse_expression("foo(x)")
    with pytest.raises(ExprSyntaxError):
        parse_expression("x + q")


def test_params_are_symbols_until_substituted():
    e = parse_expression("cos(t*x)", params=("t",))
    e2 = substitute(e, {"t": Fraction(-5, 2)})
    assert numeric_function(e2, "x")(1.0) == pytest.approx(math.cos(-2.5))


def test_decimal_numbers_roundtrip():
    e = parse_expression("0.25*x")
    assert to_text(e) == "0.25*x"
    assert isinstance(e.left, Num) and e.left.value == Fraction(1, 4)


texts = st.sampled_from(["x", "sin(x)", "exp(-x^2)", "1/(1+x^2)", "(1-cos(3*x))/x^2",
                         "x^2*cos(x)*exp(-x^2)", "sqrt(abs(x))", "-(x-1)^3", "2*pi*i",
                         "sinc(x/2)", "log(1+x^2)"])


@given(st.lists(texts, min_size=1, max_size=3), st.sampled_from(["+", "-", "*", "/"]))
def test_printer_roundtrips(parts, op):
    text = op.join(f"({p})" for p in parts)
    e = parse_expression(text)
    assert parse_expression(to_text(e)) == e


# lowering ---------------------------------------------------------------------

def test_lower_series_of_sinc():
    s = lower_series(parse_expression("sin(x)/x"), 6, "x")
    assert list(s)[:5] == [1, 0, Fraction(-1, 6), 0, Fraction(1, 120)]


def test_lower_kernel_rejects_non_monomial_division():
    with pytest.raises(LoweringError):
        lower_kernel(parse_expression("1/(1+x^2)"), "x")


def test_lower_rational_and_exppoly():
    R = lower_rational(parse_expression("1/(x^2+1)"), "x")
    assert R.den == (1, 0, 1)
    f = lower_exppoly(parse_expression("x*exp(-2*x)+3"), "x")
    assert f(1.0) == pytest.approx(math.exp(-2) + 3)


def test_numeric_function_removable_singularity():
    assert numeric_function(parse_expression("sin(x)/x"), "x")(0.0) == pytest.approx(1.0)


# config -------------------------------------------------------------------------

def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(command="integrate", tol=-1)
    with pytest.raises(ValueError):
        RunConfig.from_mapping({"command": "integrate", "colour": "red"})
    assert parse_param("t=-5/2") == ("t", Fraction(-5, 2))
    with pytest.raises(ValueError):
        parse_param("t")


# commands -------------------------------------------------------------------------

def integrate(text, **kw):
    return run_command(RunConfig(command="integrate", **kw), text)


def test_integrate_real_line_with_oracle():
    rep = integrate("sin(x)^5/x", domain="real", oracle=True)
    assert rep.value == pytest.approx(3 * PI / 8, abs=1e-12)
    assert rep.oracle["delta"] < 1e-8
    assert rep.verified


def test_integrate_finite_falls_back_to_series():
    rep = integrate("exp(-x^2)", lower="0", upper="1")
    assert rep.route == "finite-series"
    assert any("finite-kernel" in t for t in rep.diagnostics["routes_tried"])


def test_integrate_split_for_rational():
    rep = integrate("1/(1+x^2)", domain="real")
    assert rep.value == pytest.approx(PI, abs=1e-6)


def test_integrate_with_parameter():
    rep = integrate("(1-cos(t*x))/x^2", domain="real", params={"t": Fraction(1, 2)})
    assert rep.value == pytest.approx(PI / 2, abs=1e-12)


def test_fourier_symbolic_and_pointwise():
    sym = run_command(RunConfig(command="fourier"), "exp(-x^2/2)")
    assert "G[" in sym.display
    at = run_command(RunConfig(command="fourier", at="1/2"), "exp(-x^2/2)")
    assert at.value == pytest.approx(math.exp(-1 / 8), abs=1e-14)


def test_laplace_and_inverse():
    fw = run_command(RunConfig(command="laplace", at="2"), "sin(x)")
    assert fw.value == pytest.approx(0.2)
    inv = run_command(RunConfig(command="invlaplace"), "1/(x-2)")
    assert inv.display == "exp(2*x)" and inv.verified


def test_spectrum_command():
    rep = run_command(RunConfig(command="spectrum", at="1"), "exp(-t)+exp(-2*t)")
    assert rep.diagnostics["lines"] == [("1", "1"), ("2", "1")]
    assert rep.value == pytest.approx(0.503214724408055)


def test_ftc_check_polynomial_and_series():
    poly = run_command(RunConfig(command="ftc-check", lower="0", upper="2"), "x^3+2*x")
    assert poly.verified and poly.value == pytest.approx(12)
    ser = run_command(RunConfig(command="ftc-check"), "exp(x)")
    assert ser.verified


# main / formats ------------------------------------------------------------------

def test_ambiguity_exit_code_and_message():
    code, _, err = run_cli(["integrate", "--from", "-1", "--to", "1", "1/x", "--constant", "symbolic"])
    assert code != 0
    assert "non-cancelling integration constant / pole prescription required" in err


def test_prescribed_constants_shift_the_value():
    vals = []
    for c in ("0", "5/4"):
        code, out, _ = run_cli(["integrate", "--from", "-1", "--to", "1", "1/x",
                                "--constant", f"value={c}", "--format", "json"])
        assert code == 0
        vals.append(float(json.loads(out)["value"]["re"]))
    assert vals[1] - vals[0] == pytest.approx(1.25)


def test_json_report_keys():
    code, out, _ = run_cli(["integrate", "--domain", "real", "sin(x)/x", "--oracle", "--format", "json"])
    data = json.loads(out)
    assert code == 0
    assert {"value", "route", "diagnostics", "oracle", "verified"} <= set(data)
    assert data["value"]["re"] == repr(PI)
    assert "steps" in data["diagnostics"]


def test_csv_report_columns():
    code, out, _ = run_cli(["integrate", "--domain", "real", "sin(x)^2/x^2", "--reg", "sinc", "--tol", "1e-6",
                            "--format", "csv"])
    rows = [r for r in csv.reader(io.StringIO(out)) if r]
    assert code == 0
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 6


def test_syntax_error_is_reported():
    code, _, err = run_cli(["integrate", "--domain", "real", "sin(x"])
    assert code == 2 and "error" in err


def test_figures_are_written(tmp_path):
    conv = tmp_path / "conv.png"
    comb = tmp_path / "comb.png"
    assert run_cli(["integrate", "--domain", "real", "sin(x)^2/x^2", "--reg", "gaussian",
                    "--figure", str(conv)])[0] == 0
    assert run_cli(["spectrum", "exp(-t)+2*exp(-3*t)", "--figure", str(comb)])[0] == 0
    assert conv.stat().st_size > 0 and comb.stat().st_size > 0


@settings(max_examples=10, deadline=None)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(lambda t: t != 0))
def test_cosine_family_scales_with_abs_t(t):
    rep = integrate("(1-cos(t*x))/x^2", domain="real", params={"t": t})
    assert rep.value == pytest.approx(PI * abs(float(t)), abs=1e-10)
