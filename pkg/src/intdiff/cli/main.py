"""``intdiff`` command-line entry point."""

from __future__ import annotations

import argparse
import sys

from ..oracle import OracleError
from ..opcalc.atoms import ConstantError, DivergentError, KernelError
from ..powerseries import SeriesError
from .config import DOMAINS, FORMATS, RunConfig, parse_param
from .commands import run_command
from .expr import ExprSyntaxError
from .lower import LoweringError
from .report import Report, render

ENGINE_ERRORS = (ConstantError, DivergentError, KernelError, SeriesError, LoweringError,
                 ExprSyntaxError, OracleError, ValueError, ZeroDivisionError, ArithmeticError)


def _common(p: argparse.ArgumentParser, expression: bool = True):
    if expression:
        p.add_argument("expression", help="integrand / function, e.g. 'sin(x)/x'")
    p.add_argument("--tol", type=float, default=1e-9, help="tolerance for the verified flag (default 1e-9)")
    p.add_argument("--order", type=int, default=None, help="series truncation order")
    p.add_argument("--param", action="append", default=[], metavar="k=v",
                   help="numeric parameter substituted before lowering (repeatable)")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--figure", default=None, metavar="PATH",
                   help="also write a figure (convergence rows, or the comb for spectrum)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intdiff",
        description="Integrals and transforms evaluated by differentiating elementary kernels.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("integrate", help="definite integral over an interval, half-line or the real line")
    _common(p)
    p.add_argument("--domain", choices=DOMAINS, default=None)
    p.add_argument("--from", dest="lower", default=None, help="lower endpoint (rational, or -inf)")
    p.add_argument("--to", dest="upper", default=None, help="upper endpoint (rational, or inf)")
    p.add_argument("--route", choices=("auto", "series", "kernel", "delta", "w", "two-sided"), default="auto")
    p.add_argument("--reg", choices=("gaussian", "sinc"), default=None,
                   help="regularized delta schedule instead of exact atoms")
    p.add_argument("--constant", default="symbolic",
                   help="integration constants: zero, symbolic (must cancel) or value=c")
    p.add_argument("--oracle", action="store_true", help="cross-check against adaptive quadrature")

    p = sub.add_parser("fourier", help="(1/sqrt(2 pi)) int e^{ixy} f(y) dy, symbolic or at --at")
    _common(p)
    p.add_argument("--at", default=None, help="evaluation point x")
    p.add_argument("--reg", choices=("gaussian", "sinc"), default=None)
    p.add_argument("--constant", default="symbolic")
    p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("laplace", help="forward Laplace transform f(-d_x)(1/x)")
    _common(p)
    p.add_argument("--at", default=None, help="evaluation point x (> Re of every rate)")
    p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("invlaplace", help="inverse Laplace transform of a proper rational function")
    _common(p)
    p.add_argument("--at", default=None, help="evaluation point x > 0")
    p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("spectrum", help="spectral comb from a heat trace sum w*exp(-l*t)")
    _common(p)
    p.add_argument("--at", default=None, help="also evaluate the heat trace at this t")
    p.add_argument("--reg", choices=("gaussian", "sinc"), default=None, help="comb rendering for --figure")

    p = sub.add_parser("ftc-check", help="fundamental theorem and commutator identity on a series")
    _common(p)
    p.add_argument("--from", dest="lower", default=None)
    p.add_argument("--to", dest="upper", default=None)

    p = sub.add_parser("selftest", help="run the acceptance suite and print a pass/fail matrix")
    _common(p, expression=False)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    data = {"command": ns.command, "tol": ns.tol, "order": ns.order, "format": ns.format,
            "figure": ns.figure, "params": dict(parse_param(s) for s in ns.param)}
    for key in ("domain", "lower", "upper", "route", "reg", "constant", "oracle", "at"):
        if hasattr(ns, key):
            data[key] = getattr(ns, key)
    return RunConfig.from_mapping(data)


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    text = getattr(ns, "expression", None)
    try:
        cfg = config_from_args(ns)
        rep = run_command(cfg, text)
    except ENGINE_ERRORS as err:
        fmt = getattr(ns, "format", "table")
        rep = Report(ns.command, text or "", "none", error=f"{type(err).__name__}: {err}")
        out = render(rep, fmt)
        print(out)
        print(f"intdiff: error: {err}", file=sys.stderr)
        return 2
    if cfg.command == "selftest" and cfg.format == "table":
        print(rep.display)
        print(f"selftest: {'all criteria pass' if rep.verified else 'FAILED'}")
    else:
        print(render(rep, cfg.format))
    return 0 if rep.verified else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
