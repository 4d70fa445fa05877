"""One test per acceptance criterion; each prints its pass/fail line."""

from __future__ import annotations

import subprocess
import sys

import pytest

from intdiff import acceptance as acc


def _report(result):
    print(result.line())
    assert result.passed, result.detail


def test_criterion_1_closed_form_integrals():
    _report(acc.criterion_1())


def test_criterion_2_series_route_and_split():
    _report(acc.criterion_2())


def test_criterion_3_laplace_laws():
    _report(acc.criterion_3())


def test_criterion_4_spectrum_recovery():
    _report(acc.criterion_4())


def test_criterion_5_operator_algebra():
    _report(acc.criterion_5())


def test_criterion_6_w_route_eps_independence():
    _report(acc.criterion_6())


def test_criterion_7_regularization_agreement():
    _report(acc.criterion_7())


def test_criterion_8_oracle_agreement():
    _report(acc.criterion_8())


def test_criterion_8_selftest_exits_zero():
    proc = subprocess.run([sys.executable, "-m", "intdiff.cli.main", "selftest"],
                          capture_output=True, text=True, timeout=600)
    print(proc.stdout)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert proc.stdout.count("[PASS]") == 9


def test_criterion_9_ambiguity_handling():
    _report(acc.criterion_9())


@pytest.mark.parametrize("case", acc.KERNEL_CASES, ids=lambda c: c.label)
def test_each_closed_form_value(case):
    assert abs(acc.kernel_value(case) - case.exact) <= 1e-9
