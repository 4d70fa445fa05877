"""Functions of the derivative, ``f(nu d)``, acting on kernels and series."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ..exact import I, inverse, is_exact, to_exact
from ..powerseries import PowerSeries, SeriesError, radius_estimate, series_eval
from .atoms import (
    ConstantPolicy,
    KernelError,
    KernelExpr,
    Pow,
    SYMBOLIC,
    antiderivative,
    as_expr,
    causal_antiderivative,
    exp_atom,
    heat,
    is_zero,
    multiply_exp,
    num,
    power,
    shift,
)

UNITS = (1, -1, I, -I)
BUILTIN_SYMBOLS = ("one", "sin", "cos", "exp", "sinc", "gaussian", "geometric")


def normalize_nu(nu):
    if isinstance(nu, complex):
        nu = to_exact(nu)
    nu = num(nu)
    for u in UNITS:
        if nu == u:
            return num(u)
    raise ValueError(f"nu must be one of +1, -1, +i, -i (got {nu!r})")


@dataclass(frozen=True)
class DiffOperator:
    """``f(nu d_eps)`` with ``f`` a PowerSeries or a builtin id.

    ``polynomial=True`` declares a series symbol to be an exact polynomial,
    so evaluation needs no convergence check and series application shrinks
    the order by its degree.
    """

    symbol: object
    nu: object = 1
    params: tuple = ()
    polynomial: bool = False

    def __post_init__(self):
        object.__setattr__(self, "nu", normalize_nu(self.nu))
        if isinstance(self.symbol, str):
            if self.symbol not in BUILTIN_SYMBOLS:
                raise ValueError(f"unknown operator symbol {self.symbol!r}")
        elif not isinstance(self.symbol, PowerSeries):
            raise TypeError("symbol must be a PowerSeries or a builtin id")
        object.__setattr__(self, "params", tuple(self.params))

    def symbol_value(self, z):
        """``f(z)``; exact for exact ``z`` where the closed form allows."""
        if isinstance(self.symbol, PowerSeries):
            f = self.symbol
            value, tail = series_eval(f, z)
            if not self.polynomial and math.isinf(tail):
                rad = radius_estimate(f)
                if abs(complex(z - f.center)) >= rad:
                    raise SeriesError(
                        f"|{z}| lies outside the estimated convergence disc (radius {rad:.4g})")
            return num(value)
        return _builtin_value(self.symbol, self.params, z)


def _builtin_value(name, params, z):
    exact_zero = is_exact(z) and z == 0
    rate = params[0] if params else 1
    if name == "one":
        return 1
    if name == "geometric":
        if is_exact(z):
            d = 1 + z * z
            if d == 0:
                raise ZeroDivisionError("1/(1+y^2) has a pole at y = +-i")
            return num(inverse(d))
        d = 1 + complex(z) ** 2
        if d == 0:
            raise ZeroDivisionError("1/(1+y^2) has a pole at y = +-i")
        return num(1 / d)
    if exact_zero:
        return 0 if name == "sin" else 1
    w = complex(z)
    if name == "sin":
        return num(cmath.sin(complex(rate) * w))
    if name == "cos":
        return num(cmath.cos(complex(rate) * w))
    if name == "exp":
        return num(cmath.exp(complex(rate) * w))
    if name == "sinc":
        return num(cmath.sin(w) / w) if w != 0 else 1
    if name == "gaussian":
        return num(cmath.exp(-complex(rate) * w * w))
    raise ValueError(name)


def apply_to_exponential(opr: DiffOperator, a):
    """Eigenfunction rule ``f(nu d) e^{a eps} = f(nu a) e^{a eps}``."""
    a = num(a)
    return opr.symbol_value(num(opr.nu * a)), KernelExpr.atom(exp_atom(a))


def shift_apply(a, g) -> KernelExpr:
    """``e^{a d} g(eps) = g(eps + a)``."""
    return shift(as_expr(g), a)


def antiderivative_apply(g, policy: ConstantPolicy = SYMBOLIC) -> KernelExpr:
    """``d^{-1} g`` with the integration constant chosen by ``policy``."""
    return antiderivative(as_expr(g), policy)


def resolvent_apply(a, g, allow_pv: bool = False) -> KernelExpr:
    """``(d - a)^{-1} g`` through ``int_0^inf e^{-w(d-a)} dw``.

    Theta-supported atoms and exact deltas use the causal form
    ``e^{a eps} int_{-inf}^{eps} e^{-a t} g(t) dt``. A plain ``e^{r eps} u^k``
    uses the geometric expansion, which needs ``Re(r - a) > 0`` for the
    w-integral to converge; ``allow_pv`` accepts the continued value anyway.
    """
    a = num(a)
    g = as_expr(g)
    if g.consts:
        raise KernelError("resolvent of a symbolic constant diverges")
    causal_pairs, plain_pairs = [], []
    for atom, w in g.terms:
        is_causal = (isinstance(atom, Pow) and atom.theta) or (
            getattr(atom, "shape", None) == "delta")
        (causal_pairs if is_causal else plain_pairs).append((atom, w))
    out = KernelExpr()
    if causal_pairs:
        inner = multiply_exp(KernelExpr.build(causal_pairs), -a)
        out = out + multiply_exp(causal_antiderivative(inner), a)
    for atom, w in plain_pairs:
        if not isinstance(atom, Pow) or atom.k < 0:
            raise KernelError(f"resolvent of {atom} is outside the supported class")
        gap = num(atom.rate - a)
        if is_zero(gap):
            raise KernelError("resolvent hits its own pole (rate equals a)")
        if not allow_pv and not complex(gap).real > 0:
            raise KernelError(
                f"divergent w-integral: Re(rate - a) = {complex(gap).real:.4g} <= 0")
        pairs = []
        for j in range(atom.k + 1):
            c = (-1) ** j * math.factorial(atom.k) // math.factorial(atom.k - j)
            pairs.append((Pow(atom.k - j, atom.s, atom.rate), w * c * power(gap, -(j + 1))))
        out = out + KernelExpr.build(pairs)
    return out


def apply_series_operator(opr: DiffOperator, target: PowerSeries) -> PowerSeries:
    """Coefficients of ``f(nu d) t(eps)`` from the Maclaurin data of ``f`` and ``t``.

    ``result_m = sum_n c_n nu^n (m+n)!/m! t_{m+n}`` over the available
    coefficients. For a polynomial symbol the order drops by its degree;
    otherwise the target's order is kept and high coefficients are partial
    sums (coefficient 0, the value at ``eps = 0``, uses every ``c_n`` with
    ``n <= min(N_f, T)``).
    """
    if not isinstance(opr.symbol, PowerSeries):
        raise TypeError("apply_series_operator needs a PowerSeries symbol")
    f = opr.symbol
    if f.center != 0 or target.center != 0:
        raise SeriesError("series operators act on Maclaurin data")
    T = target.order
    if opr.polynomial:
        deg = f.degree()
        if deg > T:
            raise SeriesError("empty overlap: target order below the operator degree")
        order = T - max(deg, 0)
    else:
        order = T
    nu = opr.nu
    nu_pows = [power(nu, n) for n in range(f.order + 1)]
    out = []
    for m in range(order + 1):
        s = 0
        for n in range(0, min(f.order, T - m) + 1):
            c = f[n]
            t = target[m + n]
            if c == 0 or t == 0:
                continue
            s += c * nu_pows[n] * (math.factorial(m + n) // math.factorial(m)) * t
        out.append(s)
    return PowerSeries(tuple(out))


def delta_semigroup(a, g=None) -> KernelExpr:
    """``e^{a d^2}`` on a delta or Gaussian kernel: widths add."""
    if not (is_exact(a) or isinstance(a, float)) or not a > 0:
        raise KernelError("semigroup parameter must be positive")
    from .atoms import delta
    g = as_expr(delta() if g is None else g)
    return heat(g, a)
