"""Integration routes that apply ``f(nu d)`` to a kernel and take a limit.

For ``f(x) = x^-m sum_t w x^j e^{lam x} e^{-beta x^2}`` the operator is
``(nu d)^-m`` (m antiderivatives of the kernel, constants per policy) followed
by ``w nu^j d^j`` after the exact shift ``e^{lam nu d}``; ``e^{-beta (nu d)^2}``
is the heat operator when ``nu = +-i``.

========  ====  ======================  ===========================
route     nu    kernel                  read-out
========  ====  ======================  ===========================
finite    +1    (e^{eps b}-e^{eps a})/e limit eps -> 0
half-line -1    1/eps                   limit eps -> 0+
delta     -i    delta(eps) (or reg.)    2 pi * value at eps = 0
fourier   -i    delta(x)                sqrt(2 pi) * value at x
========  ====  ======================  ===========================
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..exact import I, fmt_number, is_exact
from ..opcalc.atoms import (
    SYMBOLIC,
    ConstantPolicy,
    Dist,
    DivergentError,
    KernelError,
    KernelExpr,
    Pow,
    antiderivative,
    delta,
    derivative,
    evaluate,
    heat,
    is_zero,
    limit_at,
    num,
    power,
    recip,
    shift,
)
from ..powerseries import PowerSeries, radius_estimate
from .extrapolate import richardson
from .integrand import KernelIntegrand, function_kernel
from .result import IntegralResult, RegScheme
from .series import integrate_finite

TWO_PI = 2 * math.pi
SQRT_TWO_PI = math.sqrt(2 * math.pi)
W_ROUTE_EPS = (-0.5, 0, 0.3, 1)


def apply_integrand_operator(f: KernelIntegrand, nu, target, policy: ConstantPolicy = SYMBOLIC) -> KernelExpr:
    """``f(nu d) target`` as a KernelExpr (before any limit)."""
    base = target if isinstance(target, KernelExpr) else KernelExpr.atom(target)
    for _ in range(f.m):
        base = antiderivative(base, policy)
    nu2 = num(nu * nu)
    heated: dict = {}
    out = KernelExpr((), (), base.n_consts)
    for t in f.terms:
        if not is_zero(t.beta):
            if nu2 != -1:
                raise KernelError("a Gaussian factor becomes a backward heat operator unless nu = +-i")
        if t.beta not in heated:
            heated[t.beta] = [heat(base, t.beta)]
        chain = heated[t.beta]
        while len(chain) <= t.j:
            chain.append(derivative(chain[-1]))
        g = shift(chain[t.j], num(t.rate * nu))
        out = out + g.scale(num(t.weight * power(nu, t.j - f.m)))
    return out


def _check_decay(f: KernelIntegrand, both_sides: bool):
    for t in f.terms:
        if not is_zero(t.beta):
            continue
        re = complex(t.rate).real
        if both_sides and re != 0:
            raise DivergentError(f"term with rate {t.rate} grows on one side of the real line")
        if re > 0:
            raise DivergentError(f"term with rate {t.rate} grows as x -> +inf")
        if re == 0 and t.j - f.m >= 0:
            raise DivergentError("integrand does not decay at infinity (power x^%d)" % (t.j - f.m))


def _exact_text(value, factor_name=None):
    if not is_exact(value):
        return None
    if factor_name is None:
        return fmt_number(value)
    if value == 0:
        return "0"
    return f"{fmt_number(value)}*{factor_name}"


def integrate_half_line(f: KernelIntegrand, side: str = "positive",
                        policy: ConstantPolicy = SYMBOLIC, tol: float = 1e-10) -> IntegralResult:
    """``int_0^inf f`` as ``lim_{eps->0+} f(-d) 1/eps``; the negative side by reflection."""
    if side not in ("positive", "negative"):
        raise ValueError("side is positive or negative")
    g = f if side == "positive" else f.reflect()
    g.check_integrable_at_zero()
    _check_decay(g, both_sides=False)
    expr = apply_integrand_operator(g, -1, recip(), policy)
    value = limit_at(expr, 0, "+")
    diag = {"tail": 0.0, "kernel": str(expr), "side": side, "exact": _exact_text(value)}
    return IntegralResult(complex(value), "half-line", diag, tol=tol)


def integrate_two_sided(f: KernelIntegrand, policy: ConstantPolicy = SYMBOLIC,
                        tol: float = 1e-10) -> IntegralResult:
    """Real line as the sum of the two half-line integrals."""
    pos = integrate_half_line(f, "positive", policy, tol)
    neg = integrate_half_line(f, "negative", policy, tol)
    diag = {"tail": 0.0, "halves": (pos.value, neg.value),
            "kernel": f"[{pos.diagnostics['kernel']}] + [{neg.diagnostics['kernel']}]"}
    return IntegralResult(pos.value + neg.value, "two-sided", diag, tol=tol)


def integrate_finite_kernel(f: KernelIntegrand, a, b, policy: ConstantPolicy = SYMBOLIC,
                            tol: float = 1e-10) -> IntegralResult:
    """``int_a^b f = lim_{eps->0} f(d) (e^{eps b} - e^{eps a}) / eps`` on the kernel class.

    Integrands singular inside ``[a, b]`` (like ``1/x`` on ``[-1, 1]``) leave
    the integration constant in the result; the symbolic policy reports
    that as a non-cancelling constant.
    """
    a, b = num(a), num(b)
    if a == b:
        return IntegralResult(0, "finite-kernel", {"tail": 0.0, "exact": "0", "kernel": "0"}, tol=tol)
    target = KernelExpr.build([(Pow(-1, 0, b), 1), (Pow(-1, 0, a), -1)])
    expr = apply_integrand_operator(f, 1, target, policy)
    value = limit_at(expr, 0, None)
    diag = {"tail": 0.0, "kernel": str(expr), "exact": _exact_text(value), "policy": policy.mode}
    return IntegralResult(complex(value), "finite-kernel", diag, tol=tol)


def delta_kernel(f: KernelIntegrand, policy: ConstantPolicy = SYMBOLIC, target=None) -> KernelExpr:
    """``f(-i d) target`` with ``target = delta`` by default."""
    return apply_integrand_operator(f, -I, delta() if target is None else target, policy)


def _reg_target(scheme: RegScheme, param):
    if scheme.shape == "gaussian":
        return Dist("gaussian", 0, 0, param)
    return Dist("sinc", 0, 0, 0, param)


def _regularized_values(f, scheme, policy, point=0):
    values = []
    for p in scheme.schedule:
        expr = delta_kernel(f, policy, _reg_target(scheme, p))
        values.append(complex(evaluate(expr, point)))
    return values


def integrate_real_line(f: KernelIntegrand, route: str = "delta", reg: RegScheme | None = None,
                        policy: ConstantPolicy = SYMBOLIC, tol: float = 1e-10,
                        eps_values=W_ROUTE_EPS) -> IntegralResult:
    """``int_R f`` by ``2 pi f(-i d) delta``, its regularized forms, the w-route or two halves.

    ``route``: ``delta`` (exact atoms; with ``reg`` the regularized delta and
    Richardson extrapolation), ``w`` (``2 pi delta(i d) f(eps)`` with the sinc
    window, checked across ``eps_values``) or ``two-sided``.
    """
    if not isinstance(f, KernelIntegrand):
        return _series_real_line(f, reg, tol)
    if route == "two-sided":
        return integrate_two_sided(f, policy, tol)
    f.check_integrable_at_zero()
    _check_decay(f, both_sides=True)
    if route == "w":
        return _w_route(f, reg, policy, tol, eps_values)
    if route != "delta":
        raise ValueError(f"unknown real-line route {route!r}")
    if reg is None:
        expr = delta_kernel(f, policy)
        value = limit_at(expr, 0, None)
        diag = {"tail": 0.0, "kernel": str(expr), "exact": _exact_text(num(2 * value) if is_exact(value) else value, "pi")}
        return IntegralResult(TWO_PI * complex(value), "delta-exact", diag, tol=tol)
    values = [TWO_PI * v for v in _regularized_values(f, reg, policy)]
    return _extrapolated(values, reg, f"delta-{reg.shape}", tol)


SERIES_WINDOW = RegScheme("sinc", 1.5, 1.5, 4)


def _series_real_line(f, reg, tol):
    """Series integrand: the sinc window turns ``2 pi f(-i d) delta_L`` into ``int_-L^L f``."""
    reg = SERIES_WINDOW if reg is None else reg
    radius = math.inf
    if isinstance(f, PowerSeries):
        # an entire function's ratio estimate grows with the order; it must cover every window
        radius = radius_estimate(f)
    elif f not in ("exp", "sin", "cos", "sinc", "gaussian"):
        radius = 1.0
    if radius <= max(reg.schedule):
        raise KernelError("a series integrand on the real line needs an entire function "
                          f"resolved out to the widest window {max(reg.schedule):.4g} "
                          "(use the kernel class, a split finite route or a higher order)")
    if reg.shape != "sinc":
        raise KernelError("series integrands use the sinc window; the Gaussian schedule "
                          "gives a divergent series in the width")
    values = []
    for L in reg.schedule:
        Lx = Fraction(L).limit_denominator(10 ** 6)
        r = integrate_finite(f, -Lx, Lx, tol=tol * 1e-3)
        if not r.verified:
            raise KernelError(f"series order too low for the window [-{L:.4g}, {L:.4g}] "
                              f"(tail {r.tail:.3g}); raise the order")
        values.append(r.value)
    return _extrapolated(values, reg, "delta-sinc", tol, {"window": "series"})


def _extrapolated(values, reg, route, tol, extra=None):
    ex = richardson(reg.hs, values, reg.schedule)
    ex_val, err, rows = ex.value, ex.error, ex.rows
    if reg.extrapolation == "none":
        ex_val = values[-1]
        err = abs(values[-1] - values[-2]) if len(values) > 1 else math.inf
    diag = {"order": None, "steps": rows, "tail": err, "scheme": reg.shape,
            "schedule": tuple(reg.schedule)}
    if extra:
        diag.update(extra)
    return IntegralResult(ex_val, route, diag, tol=tol)


def _w_route(f, reg, policy, tol, eps_values):
    if reg is None:
        reg = RegScheme.for_integrand("sinc", f)
    if reg.shape != "sinc":
        raise ValueError("the w-route uses the sinc (window) regularization")
    F = antiderivative(function_kernel(f), policy)
    per_eps = {}
    errors = []
    step_rows = None
    for e in eps_values:
        values = []
        for L in reg.schedule:
            window = shift(F, L) - shift(F, -L)
            values.append(complex(evaluate(window, e)))
        ex = richardson(reg.hs, values, reg.schedule)
        per_eps[e] = ex.value
        errors.append(ex.error)
        if step_rows is None:
            step_rows = ex.rows
    vals = list(per_eps.values())
    spread = max(abs(x - y) for x in vals for y in vals)
    value = per_eps[eps_values[0]] if 0 not in per_eps else per_eps[0]
    tail = max(errors) + spread
    diag = {"order": None, "steps": step_rows, "tail": tail, "spread": spread,
            "per_eps": {str(k): v for k, v in per_eps.items()}, "scheme": "sinc",
            "schedule": tuple(reg.schedule), "antiderivative": str(F)}
    return IntegralResult(value, "w", diag, tol=tol)


def fourier_kernel(f: KernelIntegrand, policy: ConstantPolicy = SYMBOLIC) -> KernelExpr:
    """``F[f](x) = sqrt(2 pi) f(-i d_x) delta(x)`` as a symbolic kernel in ``x``."""
    return delta_kernel(f, policy).scale(SQRT_TWO_PI)


def fourier_transform(f: KernelIntegrand, x, reg: RegScheme | None = None,
                      policy: ConstantPolicy = SYMBOLIC, tol: float = 1e-10) -> IntegralResult:
    """``(1/sqrt(2 pi)) int e^{ixy} f(y) dy`` at ``x``.

    Exact atoms by default (plane waves give shifted deltas, Gaussian factors
    the heat kernel); with ``reg`` the regularized delta is evaluated at ``x``
    and extrapolated.
    """
    if reg is None:
        expr = delta_kernel(f, policy)
        value = limit_at(expr, x, None)
        diag = {"tail": 0.0, "kernel": str(expr.scale(SQRT_TWO_PI)), "point": x}
        return IntegralResult(SQRT_TWO_PI * complex(value), "fourier-exact", diag, tol=tol)
    values = [SQRT_TWO_PI * v for v in _regularized_values(f, reg, policy, x)]
    return _extrapolated(values, reg, f"fourier-{reg.shape}", tol, {"point": x})


def delta_semigroup(a, g=None) -> KernelExpr:
    """``e^{a d^2}`` acting on a delta or Gaussian atom (widths add)."""
    from ..opcalc.operators import delta_semigroup as _ds
    return _ds(a, g)
