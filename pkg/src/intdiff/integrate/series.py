"""Finite-interval integration from Maclaurin data.

``int_a^b f = lim_{eps->0} f(d_eps) (e^{eps b} - e^{eps a}) / eps``. With
``f = sum c_n y^n`` the operator acting on the Maclaurin series of the kernel
leaves ``sum_n c_n (b^{n+1} - a^{n+1}) / (n+1)`` at ``eps = 0``.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from ..exact import is_exact, to_exact
from ..opcalc.atoms import is_zero, num
from ..powerseries import PowerSeries, SeriesError, radius_estimate, series_known
from .extrapolate import ConvergenceRow
from .result import IntegralResult

MAX_ORDER = 1024
_BOUNDARY = 1e-9


def _endpoint(x):
    if isinstance(x, float) and x == int(x):
        return int(x)
    if isinstance(x, (int, Fraction, str)):
        return to_exact(x)
    return num(x)


def kernel_series(a, b, N: int, center=0) -> PowerSeries:
    """Maclaurin series of ``(e^{eps B} - e^{eps A}) / eps`` with ``A = a - c``, ``B = b - c``."""
    A, B = a - center, b - center
    coeffs = []
    for n in range(N + 1):
        coeffs.append((B ** (n + 1) - A ** (n + 1)) * Fraction(1, math.factorial(n + 1)))
    return PowerSeries(tuple(coeffs))


def operator_terms(f: PowerSeries, target: PowerSeries, nu=1) -> list:
    """Terms ``c_n nu^n n! t_n`` of ``f(nu d) t`` at ``eps = 0``."""
    out = []
    for n in range(min(f.order, target.order) + 1):
        c = f[n]
        out.append(0 if c == 0 else c * nu ** n * math.factorial(n) * target[n])
    return out


def series_partial_sums(f, a, b, N: int) -> list:
    """Partial sums ``S_0..S_N`` of the finite-interval series (exact for exact data)."""
    a, b = _endpoint(a), _endpoint(b)
    series = series_known(f, (), N) if isinstance(f, str) else f.truncate(min(N, f.order))
    terms = operator_terms(series, kernel_series(a, b, series.order, series.center))
    sums, s = [], 0
    for t in terms:
        s = s + t
        sums.append(num(s))
    return sums


def _builtin_radius(name, center=0):
    if name == "geometric":
        c = complex(center)
        return min(abs(c - 1j), abs(c + 1j))
    return math.inf


def _geometric_tail(terms):
    nz = [(n, abs(complex(t))) for n, t in enumerate(terms) if not is_zero(t)]
    if not nz:
        return 0.0
    if len(nz) < 2:
        return math.inf
    (n0, t0), (n1, t1) = nz[-2], nz[-1]
    if t1 == 0:
        return 0.0
    rho = (t1 / t0) ** (1.0 / (n1 - n0))
    if rho >= 1.0:
        return math.inf
    return t1 * rho / (1.0 - rho)


def accelerate_partial_sums(sums, dps: int = 50):
    """Iterated Aitken delta-squared on exact partial sums, in ``dps``-digit arithmetic.

    Returns ``(estimate, error, levels)`` where the error is the change of the
    last entry between the two deepest accepted levels.
    """
    with mpmath.workdps(dps):
        seq = [_mpc(s) for s in sums]
        best, best_err, levels = seq[-1], math.inf, 0
        prev_last = seq[-1]
        floor = mpmath.mpf(10) ** (-(dps - 8))
        while len(seq) >= 3:
            new = []
            for i in range(len(seq) - 2):
                d = seq[i + 2] - 2 * seq[i + 1] + seq[i]
                if abs(d) <= floor * (1 + abs(seq[i + 2])):
                    new = None
                    break
                new.append(seq[i + 2] - (seq[i + 2] - seq[i + 1]) ** 2 / d)
            if not new:
                break
            seq = new
            levels += 1
            err = abs(seq[-1] - prev_last)
            prev_last = seq[-1]
            if err < best_err:
                best, best_err = seq[-1], err
        return complex(best), float(best_err), levels


def _mpc(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return mpmath.mpf(x)
    if is_exact(x):
        return mpmath.mpc(_mpc(x.re), _mpc(x.im))
    return mpmath.mpc(complex(x))


def _evaluate_once(series: PowerSeries, a, b, radius, accelerate: bool):
    A, B = a - series.center, b - series.center
    reach = max(abs(complex(A)), abs(complex(B)))
    boundary = math.isfinite(radius) and abs(reach - radius) <= _BOUNDARY * radius
    if math.isfinite(radius) and reach > radius * (1 + _BOUNDARY):
        raise SeriesError(
            f"interval [{a}, {b}] leaves the convergence disc (radius {radius:.6g} about "
            f"{series.center}); split the interval, e.g. at the disc boundary")
    terms = operator_terms(series, kernel_series(a, b, series.order, series.center))
    sums, s = [], 0
    for t in terms:
        s = s + t
        sums.append(s)
    exact_sum = num(s)
    if boundary and accelerate:
        nz = [sums[n] for n, t in enumerate(terms) if not is_zero(t)]
        if len(nz) < 3:
            return complex(exact_sum), math.inf, exact_sum, "boundary"
        est, err, _ = accelerate_partial_sums(nz)
        return est, err, exact_sum, "boundary"
    tail = _geometric_tail(terms) if not boundary else math.inf
    return complex(exact_sum), tail, exact_sum, "interior"


def integrate_finite(f, a, b, tol: float = 1e-10, order: int | None = None,
                     params=(), accelerate: bool = True, max_order: int = MAX_ORDER,
                     radius: float | None = None) -> IntegralResult:
    """``int_a^b f`` by the operator acting on ``(e^{eps b} - e^{eps a}) / eps``.

    ``f`` is a PowerSeries (used as given) or a builtin id (order doubled
    from 16 until the tail bound meets ``tol``, up to ``max_order``).
    Intervals touching the convergence circle use iterated Aitken
    acceleration of the partial sums; intervals leaving it are rejected.
    ``radius`` overrides the ratio-test estimate (``math.inf`` for polynomials).
    """
    a, b = _endpoint(a), _endpoint(b)
    if a == b:
        return IntegralResult(0, "finite-series", {"order": 0, "tail": 0.0, "exact": "0",
                                                   "steps": ()}, tol=tol)
    rows = []
    if isinstance(f, PowerSeries):
        radius = radius_estimate(f) if radius is None else radius
        est, tail, exact_sum, kind = _evaluate_once(f, a, b, radius, accelerate)
        rows.append(ConvergenceRow(0, f.order, est, math.inf, tail))
        N = f.order
    else:
        radius = _builtin_radius(f) if radius is None else radius
        N = order if order is not None else 16
        prev = None
        step = 0
        while True:
            series = series_known(f, params, N)
            est, tail, exact_sum, kind = _evaluate_once(series, a, b, radius, accelerate)
            delta = abs(est - prev) if prev is not None else math.inf
            rows.append(ConvergenceRow(step, N, est, delta, tail))
            if order is not None or tail <= tol or N >= max_order:
                break
            prev = est
            N = min(2 * N, max_order)
            step += 1
    diag = {"order": N, "steps": tuple(rows), "tail": tail, "convergence": kind,
            "partial_sum": exact_sum}
    return IntegralResult(est, "finite-series", diag, tol=tol)


RECIPROCAL_IMAGES = {"geometric": "geometric"}


def integrate_finite_split(f, pieces, tol: float = 1e-10, order: int | None = None,
                           reciprocal=None) -> IntegralResult:
    """Sum of finite-series integrals over ``pieces``.

    Each piece is ``(a, b)`` or ``(a, b, "reciprocal")``; the latter maps
    ``x -> 1/x``, integrating ``f(1/y)/y^2`` over ``[1/b, 1/a]`` (infinite
    endpoints allowed). That image is ``reciprocal`` when given (a builtin id
    or PowerSeries), else looked up for builtins (``1/(1+x^2)`` maps to itself).
    """
    total = 0j
    rows, tails, parts = [], [], []
    for i, piece in enumerate(pieces):
        a, b = piece[0], piece[1]
        sub = piece[2] if len(piece) > 2 else None
        g = f
        if sub == "reciprocal" and reciprocal is not None:
            g = reciprocal
            a, b = _recip(b), _recip(a)
        elif sub == "reciprocal":
            if not isinstance(f, str) or f not in RECIPROCAL_IMAGES:
                raise SeriesError("x -> 1/x substitution needs a builtin with a known reciprocal image")
            g = RECIPROCAL_IMAGES[f]
            a, b = _recip(b), _recip(a)
        elif sub is not None:
            raise SeriesError(f"unknown substitution {sub!r}")
        if any(isinstance(x, float) and math.isinf(x) for x in (a, b)):
            raise SeriesError("infinite endpoint needs the reciprocal substitution")
        r = integrate_finite(g, a, b, tol=tol / max(len(pieces), 1), order=order)
        total += r.value
        tails.append(r.tail)
        parts.append({"interval": (str(a), str(b)), "substitution": sub, "value": r.value,
                      "tail": r.tail, "order": r.diagnostics["order"]})
        rows.append(ConvergenceRow(i, r.diagnostics["order"], total, abs(r.value), r.tail))
    tail = math.fsum(tails) if all(math.isfinite(t) for t in tails) else math.inf
    diag = {"order": max((p["order"] for p in parts), default=0), "steps": tuple(rows),
            "tail": tail, "pieces": tuple(parts)}
    return IntegralResult(total, "finite-series-split", diag, tol=tol)


def _recip(x):
    if isinstance(x, float) and math.isinf(x):
        return 0
    x = _endpoint(x)
    if x == 0:
        raise SeriesError("x -> 1/x substitution cannot cross 0")
    return num(Fraction(1) / x) if is_exact(x) else 1 / x


def real_line_pieces():
    """``(-inf,-1] + [-1,1] + [1,inf)`` with the outer pieces reflected by ``x -> 1/x``."""
    return [(-math.inf, -1, "reciprocal"), (-1, 1), (1, math.inf, "reciprocal")]
