"""One function per CLI command; each returns a :class:`Report`."""

from __future__ import annotations

import math
import warnings
from fractions import Fraction

from ..exact import is_exact, to_exact
from ..integrate import (
    IntegralResult,
    RegScheme,
    fourier_kernel,
    fourier_transform,
    integrate_finite,
    integrate_finite_kernel,
    integrate_finite_split,
    integrate_half_line,
    integrate_real_line,
)
from ..integrate.extrapolate import ConvergenceRow
from ..laplace import (
    comb_render,
    heat_trace,
    kernel_to_rational,
    laplace_forward,
    laplace_inverse_rational,
    laplace_kernel,
    spectrum_recover,
)
from ..laplace import polyexact as P
from ..laplace.exppoly import exppoly_str
from ..opcalc import commutator_derivative_check
from ..opcalc.atoms import ConstantPolicy, KernelError, evaluate
from ..oracle import quad_unbounded
from ..powerseries import PowerSeries, SeriesError, series_calculus, series_eval
from .config import RunConfig
from .crosscheck import oracle_integral
from .expr import BinOp, Call, Num, Sym, parse_expression, substitute, the_variable, to_text
from .lower import (
    LoweringError,
    lower_exppoly,
    lower_kernel,
    lower_rational,
    lower_series,
    numeric_function,
    rational_series,
    reciprocal_image,
)
from .report import Report

SERIES_START = 16
SERIES_MAX = 256
# failures that mean "this route does not apply", so the next route is tried
FALLBACK_ERRORS = (LoweringError, KernelError, SeriesError)


def _parse(cfg: RunConfig, text: str):
    e = parse_expression(text, params=cfg.params.keys())
    e = substitute(e, dict(cfg.params))
    return e, the_variable(e)


def _endpoint(text):
    t = str(text).strip().lower()
    if t in ("inf", "+inf", "infinity"):
        return math.inf
    if t in ("-inf", "-infinity"):
        return -math.inf
    return to_exact(t)


def _domain_and_bounds(cfg: RunConfig):
    if cfg.domain is None and cfg.lower is not None and cfg.upper is not None:
        a, b = _endpoint(cfg.lower), _endpoint(cfg.upper)
        infinite = (isinstance(a, float), isinstance(b, float))
        if infinite == (False, False):
            return "finite", a, b
        if a == -math.inf and b == math.inf:
            return "real", None, None
        if a == 0 and b == math.inf:
            return "half+", None, None
        if a == -math.inf and b == 0:
            return "half-", None, None
        raise ValueError("infinite intervals must be [0, inf), (-inf, 0] or the real line")
    domain = cfg.resolved_domain()
    if domain == "finite":
        if cfg.lower is None or cfg.upper is None:
            raise ValueError("a finite domain needs --from and --to")
        return domain, _endpoint(cfg.lower), _endpoint(cfg.upper)
    return domain, None, None


def _result_report(cfg, text, res: IntegralResult, tried) -> Report:
    diag = {k: v for k, v in res.diagnostics.items() if k != "steps"}
    if tried:
        diag["routes_tried"] = tried
    return Report("integrate", text, res.route, value=res.value, diagnostics=diag,
                  rows=tuple(res.diagnostics.get("steps", ())), verified=res.verified,
                  display=res.exact)


# integrate ---------------------------------------------------------------------

def _series_finite(e, var, a, b, cfg: RunConfig) -> IntegralResult:
    """Finite-series route; order doubles from 16 unless ``--order`` fixes it."""
    N = cfg.order if cfg.order is not None else SERIES_START
    rows, prev = [], None
    while True:
        series = lower_series(e, N, var)
        res = integrate_finite(series, a, b, tol=cfg.tol)
        delta = abs(res.value - prev) if prev is not None else math.inf
        rows.append(ConvergenceRow(len(rows), N, res.value, delta, res.tail))
        if cfg.order is not None or res.verified or N >= SERIES_MAX:
            break
        prev, N = res.value, 2 * N
    diag = dict(res.diagnostics, steps=tuple(rows))
    return IntegralResult(res.value, "finite-series", diag, tol=cfg.tol)


def _series_split(e, var, domain, cfg: RunConfig) -> IntegralResult:
    """Rational integrands on unbounded domains: ``x -> 1/x`` maps the outer pieces inward."""
    R = lower_rational(e, var)
    N = cfg.order if cfg.order is not None else 200
    inner = rational_series(R, N)
    outer = rational_series(reciprocal_image(R), N)
    pieces = {"real": [(-math.inf, -1, "reciprocal"), (-1, 1), (1, math.inf, "reciprocal")],
              "half+": [(0, 1), (1, math.inf, "reciprocal")],
              "half-": [(-math.inf, -1, "reciprocal"), (-1, 0)]}[domain]
    return integrate_finite_split(inner, pieces, tol=cfg.tol, reciprocal=outer)


def _reg_scheme(cfg, k):
    return RegScheme.for_integrand(cfg.reg, k) if cfg.reg else None


def _integrate_attempts(e, var, domain, a, b, cfg: RunConfig):
    policy = ConstantPolicy.parse(cfg.constant)
    route = cfg.route
    if domain == "finite":
        table = {"kernel": ["finite-kernel"], "series": ["finite-series"],
                 "auto": ["finite-kernel", "finite-series"]}
    elif domain in ("half+", "half-"):
        table = {"kernel": ["half-line"], "series": ["series-split"],
                 "auto": ["half-line", "series-split"]}
    else:
        table = {"kernel": ["delta"], "delta": ["delta"], "w": ["w"], "two-sided": ["two-sided"],
                 "series": ["series-split", "series-window"],
                 "auto": ["delta", "series-split", "series-window"]}
    if route not in table:
        raise ValueError(f"route {route!r} does not apply to the {domain} domain")
    for name in table[route]:
        yield name, _route_runner(name, e, var, domain, a, b, cfg, policy)


def _route_runner(name, e, var, domain, a, b, cfg, policy):
    def run():
        if name == "finite-kernel":
            return integrate_finite_kernel(lower_kernel(e, var), a, b, policy, tol=cfg.tol)
        if name == "finite-series":
            return _series_finite(e, var, a, b, cfg)
        if name == "half-line":
            side = "positive" if domain == "half+" else "negative"
            return integrate_half_line(lower_kernel(e, var), side, policy, tol=cfg.tol)
        if name == "series-split":
            return _series_split(e, var, domain, cfg)
        if name == "series-window":
            return integrate_real_line(lower_series(e, cfg.order or 400, var), reg=None, tol=cfg.tol)
        k = lower_kernel(e, var)
        if name == "delta":
            return integrate_real_line(k, "delta", _reg_scheme(cfg, k), policy, tol=cfg.tol)
        return integrate_real_line(k, name, _reg_scheme(cfg, k), policy, tol=cfg.tol)
    return run


def cmd_integrate(cfg: RunConfig, text: str) -> Report:
    e, var = _parse(cfg, text)
    domain, a, b = _domain_and_bounds(cfg)
    tried, last_err = [], None
    res = None
    for name, run in _integrate_attempts(e, var, domain, a, b, cfg):
        try:
            res = run()
            break
        except FALLBACK_ERRORS as err:
            tried.append(f"{name}: {err}")
            last_err = err
    if res is None:
        raise last_err
    rep = _result_report(cfg, text, res, tried)
    if cfg.oracle:
        q = oracle_integral(e, var, domain, a, b)
        rep.oracle = {"value": q.value, "delta": abs(q.value - res.value),
                      "abs_error_estimate": q.abs_error_estimate, "evaluations": q.evaluations}
    return rep


# fourier -----------------------------------------------------------------------

def cmd_fourier(cfg: RunConfig, text: str) -> Report:
    e, var = _parse(cfg, text)
    k = lower_kernel(e, var)
    policy = ConstantPolicy.parse(cfg.constant)
    if cfg.at is None:
        g = fourier_kernel(k, policy)
        return Report("fourier", text, "fourier-exact", display=str(g).replace("eps", "x"),
                      diagnostics={"kernel": str(g)}, verified=True)
    x = float(to_exact(cfg.at))
    res = fourier_transform(k, x, _reg_scheme(cfg, k), policy, tol=cfg.tol)
    rep = Report("fourier", text, res.route, value=res.value,
                 diagnostics={kk: v for kk, v in res.diagnostics.items() if kk != "steps"},
                 rows=tuple(res.diagnostics.get("steps", ())), verified=res.verified)
    if cfg.oracle:
        wave = Call("exp", BinOp("*", BinOp("*", Sym("i"), Num(Fraction(x))), Sym(var)))
        q = oracle_integral(BinOp("*", wave, e), var, "real")
        val = q.value / math.sqrt(2 * math.pi)
        rep.oracle = {"value": val, "delta": abs(val - res.value)}
    return rep


# laplace -----------------------------------------------------------------------

def cmd_laplace(cfg: RunConfig, text: str) -> Report:
    e, var = _parse(cfg, text)
    diag = {}
    try:
        f = lower_exppoly(e, var)
        expr = laplace_forward(f)
        R = kernel_to_rational(expr)
        display = f"{R}"
        diag["pole_form"] = str(expr).replace("eps", "x")
        verified, route = True, "shift"
        value = laplace_forward(f, to_exact(cfg.at)) if cfg.at is not None else None
    except FALLBACK_ERRORS as err:
        diag["exact_route"] = str(err)
        series = lower_series(e, cfg.order or 32, var)
        polynomial = series.degree() < series.order - 8
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            expr = laplace_forward(series, polynomial=polynomial)
            value = laplace_forward(series, to_exact(cfg.at), polynomial=polynomial) \
                if cfg.at is not None else None
        display = str(expr).replace("eps", "x")
        route = "term-wise"
        verified = polynomial
        if not polynomial:
            diag["warning"] = "asymptotic series: do not sum naively (optimal truncation used)"
    rep = Report("laplace", text, route, value=None if value is None else complex(value),
                 display=display, diagnostics=diag, verified=verified)
    if cfg.oracle and cfg.at is not None:
        x = float(to_exact(cfg.at))
        g = numeric_function(e, var)
        q = quad_unbounded(lambda y: complex(g(y)) * math.exp(-x * y), "half_line", tol=1e-11,
                           method="decaying")
        rep.oracle = {"value": q.value, "delta": abs(q.value - complex(value))}
    return rep


def cmd_invlaplace(cfg: RunConfig, text: str) -> Report:
    e, var = _parse(cfg, text)
    R = lower_rational(e, var)
    f = laplace_inverse_rational(R)
    back = laplace_kernel(f)
    diag = {"partial_fractions": [(str(t.pole), t.order, str(t.coeff)) for t in R.partial_fractions()]}
    if f.is_exact():
        verified = kernel_to_rational(back) == R
        diag["roundtrip"] = "exact" if verified else "mismatch"
    else:
        lead = max(complex(t.pole).real for t in R.partial_fractions())
        pts = [lead + 1 + j for j in range(5)]
        err = max(abs(complex(evaluate(back, p)) - complex(R(p))) for p in pts)
        diag["roundtrip_max_error"] = err
        verified = err <= cfg.tol
    value = f(float(to_exact(cfg.at))) if cfg.at is not None else None
    rep = Report("invlaplace", text, "resolvent", value=None if value is None else complex(value),
                 display=exppoly_str(f), diagnostics=diag, verified=verified)
    if cfg.oracle:
        lead = max((complex(t.pole).real for t in R.partial_fractions()), default=0.0)
        pts = [max(lead, 0.0) + 1 + j for j in range(3)]
        worst, first = 0.0, None
        for p in pts:
            q = quad_unbounded(lambda y, p=p: complex(f(y)) * math.exp(-p * y), "half_line",
                               tol=1e-11, method="decaying")
            first = q.value if first is None else first
            worst = max(worst, abs(q.value - complex(R(p))))
        rep.oracle = {"value": first, "delta": worst, "at": pts[0],
                      "check": "quadrature Laplace transform of the result vs the input"}
        rep.verified = rep.verified and worst <= max(cfg.tol, 1e-8)
    return rep


# spectrum ----------------------------------------------------------------------

def cmd_spectrum(cfg: RunConfig, text: str) -> Report:
    e, var = _parse(cfg, text)
    h = lower_exppoly(e, var)
    spec = spectrum_recover(h)
    verified = spec.trace() == h
    lines = [(str(r), str(w)) for r, w in spec.lines]
    diag = {"lines": lines, "total_weight": str(spec.total_weight)}
    value = heat_trace(spec, float(to_exact(cfg.at))) if cfg.at is not None else None
    rep = Report("spectrum", text, "shift-on-delta", value=value,
                 display="; ".join(f"({r}, {w})" for r, w in lines), diagnostics=diag,
                 verified=verified)
    if cfg.figure:
        from .plots import plot_comb
        width = 0.01 if cfg.reg in (None, "gaussian") else None
        reg = RegScheme("gaussian", width) if width else RegScheme("sinc", 40.0, 2.0)
        hi = float(spec.lines[-1][0]) + 2 if spec.lines else 1.0
        grid = [hi * i / 2000 for i in range(2001)]
        plot_comb(spec, grid, comb_render(spec, reg, grid), cfg.figure, title=f"comb of {text}")
        rep.diagnostics["figure"] = cfg.figure
    return rep


# ftc-check ---------------------------------------------------------------------

def cmd_ftc(cfg: RunConfig, text: str) -> Report:
    e, var = _parse(cfg, text)
    a = _endpoint(cfg.lower) if cfg.lower is not None else -1
    b = _endpoint(cfg.upper) if cfg.upper is not None else 1
    diag = {}
    try:
        R = lower_rational(e, var)
        polynomial = P.degree(R.den) == 0
    except FALLBACK_ERRORS:
        polynomial = False
    if polynomial:
        f = PowerSeries(tuple(P.scale(R.num, P.inverse(R.den[0])) or (0,)))
    else:
        f = lower_series(e, cfg.order or 32, var)
    df = series_calculus("differentiate", f)
    res = (integrate_finite(df, a, b, tol=cfg.tol, radius=math.inf if polynomial else None)
           if f.order > 0 else None)
    lhs = res.value if res is not None else 0
    exact_lhs = res.diagnostics.get("partial_sum") if res is not None else 0
    rhs = series_eval(f, b)[0] - series_eval(f, a)[0]
    if is_exact(exact_lhs) and is_exact(rhs):
        diff = exact_lhs - rhs
        diag["ftc_difference"] = str(diff)
        ok = diff == 0
    else:
        diff = abs(complex(lhs) - complex(rhs))
        diag["ftc_difference"] = diff
        ok = diff <= cfg.tol
    g = numeric_function(e, var)
    diag["vs_function"] = abs(complex(lhs) - (complex(g(float(b))) - complex(g(float(a)))))
    N = max(24, f.order + 2)
    comm = commutator_derivative_check(f, N)
    diag["commutator"] = str(comm) if comm == 0 else comm
    diag["series_order"] = f.order
    ok = ok and (comm == 0 or comm <= cfg.tol)
    return Report("ftc-check", text, "finite-series", value=complex(lhs), diagnostics=diag,
                  verified=ok, display=to_text(e))


def cmd_selftest(cfg: RunConfig) -> Report:
    from ..acceptance import run_all
    results = run_all()
    passed = all(r.passed for r in results)
    rows = [f"[{'PASS' if r.passed else 'FAIL'}] {r.number}. {r.name}: {r.detail}" for r in results]
    return Report("selftest", "acceptance suite", "selftest", display="\n".join(rows),
                  diagnostics={"criteria": {str(r.number): r.passed for r in results}},
                  verified=passed)


COMMAND_FUNCS = {
    "integrate": cmd_integrate,
    "fourier": cmd_fourier,
    "laplace": cmd_laplace,
    "invlaplace": cmd_invlaplace,
    "spectrum": cmd_spectrum,
    "ftc-check": cmd_ftc,
}


def run_command(cfg: RunConfig, text: str | None = None) -> Report:
    if cfg.command == "selftest":
        return cmd_selftest(cfg)
    rep = COMMAND_FUNCS[cfg.command](cfg, text)
    if cfg.figure and cfg.command != "spectrum" and rep.rows:
        from .plots import plot_convergence
        plot_convergence(rep.rows, cfg.figure, title=f"{cfg.command}: {text} ({rep.route})",
                         exact=rep.oracle["value"].real if rep.oracle else None)
        rep.diagnostics["figure"] = cfg.figure
    return rep
