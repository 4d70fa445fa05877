"""Truncated formal power series.

A :class:`PowerSeries` holds the Maclaurin (or Taylor, about ``center``)
coefficients ``c_0 .. c_N`` of a function. Coefficients stay exact
(``int``/``Fraction``/``GaussianRational``) when every input is exact; any
float demotes the whole series to floating kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import GaussianRational, inverse, is_exact, simplify, to_exact

DEFAULT_ORDER = 64


class SeriesError(ValueError):
    pass


def _normalize(coeffs: Iterable) -> tuple:
    coeffs = list(coeffs)
    if all(is_exact(c) for c in coeffs):
        return tuple(simplify(c) for c in coeffs)
    out = []
    for c in coeffs:
        z = complex(c)
        out.append(z if z.imag else z.real)
    return tuple(out)


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple
    center: object = 0

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise SeriesError("a power series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))
        object.__setattr__(self, "center", to_exact(self.center) if is_exact(self.center) else self.center)

    @classmethod
    def from_list(cls, coeffs: Sequence, center=0) -> "PowerSeries":
        return cls(tuple(coeffs), center)

    @classmethod
    def constant(cls, value, order: int = 0) -> "PowerSeries":
        return cls((value,) + (0,) * order)

    @classmethod
    def monomial(cls, n: int, order: int | None = None, coeff=1) -> "PowerSeries":
        order = n if order is None else order
        if order < n:
            raise SeriesError("order below monomial degree")
        return cls(tuple(coeff if k == n else 0 for k in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    truncation_order = order

    @property
    def coeff_kind(self) -> str:
        return "exact" if all(is_exact(c) for c in self.coeffs) else "floating"

    @property
    def is_exact(self) -> bool:
        return self.coeff_kind == "exact"

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise SeriesError(f"cannot raise truncation order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1], self.center)

    def degree(self) -> int:
        """Index of the highest nonzero coefficient (-1 for the zero series)."""
        for n in range(self.order, -1, -1):
            if self.coeffs[n] != 0:
                return n
        return -1

    # arithmetic sugar -------------------------------------------------
    def __add__(self, other):
        return series_arith("add", self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return series_arith("sub", self, other)

    def __rsub__(self, other):
        return series_arith("add", -self, other)

    def __neg__(self):
        return series_arith("scale", self, -1)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_arith("mul", self, other)
        return series_arith("scale", self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return series_divide(self, other)
        return series_arith("scale", self, inverse(other))

    def __call__(self, x):
        return series_eval(self, x)[0]


def _check_centers(a: PowerSeries, b: PowerSeries):
    if a.center != b.center:
        raise SeriesError(f"mismatched centers {a.center} and {b.center}")


def series_arith(op: str, a: PowerSeries, b) -> PowerSeries:
    """``add``, ``sub``, ``mul``, ``scale`` or ``compose`` two series.

    Results are truncated to the smaller operand order, except ``compose(a, b)``
    = ``a(b(x))`` which keeps the order of ``a`` and needs ``b(0) = 0``.
    """
    if op == "scale":
        return PowerSeries(tuple(c * b for c in a.coeffs), a.center)
    if not isinstance(b, PowerSeries):
        b = PowerSeries.constant(b, a.order)
    _check_centers(a, b)
    n = min(a.order, b.order)
    if op == "add":
        return PowerSeries(tuple(a[k] + b[k] for k in range(n + 1)), a.center)
    if op == "sub":
        return PowerSeries(tuple(a[k] - b[k] for k in range(n + 1)), a.center)
    if op == "mul":
        out = []
        for k in range(n + 1):
            s = 0
            for j in range(k + 1):
                if a[j] != 0 and b[k - j] != 0:
                    s += a[j] * b[k - j]
            out.append(s)
        return PowerSeries(tuple(out), a.center)
    if op == "compose":
        # the inner series is taken as exact through its stored order, so the
        # result keeps the outer order
        if b[0] != 0:
            raise SeriesError("compose needs an inner series with zero constant term")
        n = a.order
        result = PowerSeries.constant(a[n], n)
        inner = PowerSeries(b.coeffs[: n + 1] + (0,) * max(0, n - b.order), b.center)
        for k in range(n - 1, -1, -1):
            result = series_arith("mul", result, inner) + PowerSeries.constant(a[k], n)
        return PowerSeries(result.coeffs, a.center)
    raise SeriesError(f"unknown series operation {op!r}")


def series_reciprocal(a: PowerSeries) -> PowerSeries:
    if a[0] == 0:
        raise SeriesError("reciprocal of a series with zero constant term")
    inv0 = inverse(a[0])
    out = [inv0]
    for k in range(1, a.order + 1):
        s = 0
        for j in range(1, k + 1):
            if a[j] != 0:
                s += a[j] * out[k - j]
        out.append(-s * inv0)
    return PowerSeries(tuple(out), a.center)


def series_divide(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """``a / b``, cancelling a common power of ``x`` when ``b(0) = 0``."""
    _check_centers(a, b)
    shift = 0
    while shift <= b.order and b[shift] == 0:
        shift += 1
    if shift > b.order:
        raise SeriesError("division by the zero series")
    for k in range(shift):
        if k <= a.order and a[k] != 0:
            raise SeriesError("quotient has a pole at the expansion point")
    a2 = PowerSeries(a.coeffs[shift:] or (0,), a.center)
    b2 = PowerSeries(b.coeffs[shift:], b.center)
    n = min(a2.order, b2.order)
    return series_arith("mul", a2.truncate(n), series_reciprocal(b2.truncate(n)))


def series_power(a: PowerSeries, n: int) -> PowerSeries:
    if n < 0:
        return series_power(series_reciprocal(a), -n)
    result = PowerSeries.constant(1, a.order)
    result = PowerSeries(result.coeffs, a.center)
    base = a
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def series_calculus(op: str, a: PowerSeries) -> PowerSeries:
    """``differentiate`` (order drops by one) or ``antiderivative`` (constant 0)."""
    if op == "differentiate":
        if a.order == 0:
            return PowerSeries((0,), a.center)
        return PowerSeries(tuple((n + 1) * a[n + 1] for n in range(a.order)), a.center)
    if op == "antiderivative":
        out = [0]
        for n, c in enumerate(a.coeffs):
            out.append(c / (n + 1) if not is_exact(c) else Fraction(1, n + 1) * c)
        return PowerSeries(tuple(out), a.center)
    raise SeriesError(f"unknown calculus operation {op!r}")


def differentiate(a: PowerSeries) -> PowerSeries:
    return series_calculus("differentiate", a)


def antiderivative(a: PowerSeries) -> PowerSeries:
    return series_calculus("antiderivative", a)


def _last_nonzero(a: PowerSeries, count: int):
    idx = [n for n in range(a.order + 1) if a[n] != 0]
    return idx[-count:]


def series_eval(a: PowerSeries, x) -> tuple:
    """Horner evaluation at ``x`` plus a geometric tail estimate.

    The estimate is ``|c_N x^N| / (1 - r)`` with ``r`` the per-step ratio of
    the last two nonzero terms; it is ``inf`` ("no bound") when ``r >= 1``.
    """
    u = x - a.center if a.center != 0 else x
    value = 0
    for c in reversed(a.coeffs):
        value = value * u + c
    idx = _last_nonzero(a, 2)
    if not idx:
        return value, 0.0
    last = idx[-1]
    term_last = abs(complex(a[last])) * abs(complex(u)) ** last
    if term_last == 0.0:
        return value, 0.0
    if len(idx) < 2:
        return value, math.inf
    prev = idx[0]
    term_prev = abs(complex(a[prev])) * abs(complex(u)) ** prev
    r = (term_last / term_prev) ** (1.0 / (last - prev))
    if r >= 1.0:
        return value, math.inf
    return value, term_last / (1.0 - r)


def radius_estimate(a: PowerSeries, window: int = 8) -> float:
    """Ratio-test estimate of the convergence radius from the last nonzero coefficients."""
    idx = _last_nonzero(a, window)
    if len(idx) < 2:
        return math.inf
    first, last = idx[0], idx[-1]
    # logs, because high-order coefficients underflow as floats
    return math.exp((_log_abs(a[first]) - _log_abs(a[last])) / (last - first))


def _log_abs(c) -> float:
    if isinstance(c, int):
        return math.log(abs(c))
    if isinstance(c, Fraction):
        return math.log(abs(c.numerator)) - math.log(c.denominator)
    if is_exact(c):
        m2 = c.re * c.re + c.im * c.im
        return 0.5 * (math.log(m2.numerator) - math.log(m2.denominator))
    return math.log(abs(complex(c)))


def taylor_shift(a: PowerSeries, new_center) -> PowerSeries:
    """Re-expand about ``new_center``; exact for exact data, same truncation order."""
    d = new_center - a.center
    n = a.order
    out = []
    for j in range(n + 1):
        s = 0
        for m in range(j, n + 1):
            if a[m] != 0:
                s += a[m] * math.comb(m, j) * d ** (m - j)
        out.append(s)
    return PowerSeries(tuple(out), new_center)


# builtin Maclaurin series ---------------------------------------------------

BUILTINS = ("sin", "cos", "exp", "sinc", "geometric", "gaussian")
_ALIASES = {"geometric_1_over_1_plus_x2": "geometric", "sinc": "sinc"}


def _frac(x):
    return Fraction(x) if isinstance(x, int) else x


def series_known(name: str, params: Sequence = (), N: int = DEFAULT_ORDER,
                 center=0) -> PowerSeries:
    """Exact Maclaurin coefficients of a builtin through order ``N``.

    ``sin``, ``cos``, ``exp`` take an optional rate ``a`` (``sin(a x)``);
    ``gaussian`` takes an optional ``b`` for ``exp(-b x^2)``; ``geometric``
    is ``1/(1+x^2)`` and accepts any center off the poles ``+-i``.
    """
    if N < 0:
        raise SeriesError("truncation order must be nonnegative")
    name = _ALIASES.get(name, name)
    if name not in BUILTINS:
        raise SeriesError(f"unknown builtin series {name!r}")
    params = [to_exact(p) if isinstance(p, (int, Fraction, str)) else p for p in params]
    if name != "geometric" and center != 0:
        raise SeriesError(f"builtin {name!r} is only tabulated about 0")
    fact = math.factorial

    if name in ("sin", "cos", "exp"):
        rate = params[0] if params else 1
        if len(params) > 1:
            raise SeriesError(f"{name} takes at most one parameter")
        coeffs = []
        for n in range(N + 1):
            if name == "exp":
                c = Fraction(1, fact(n))
            elif name == "sin":
                c = Fraction((-1) ** (n // 2), fact(n)) if n % 2 else 0
            else:
                c = 0 if n % 2 else Fraction((-1) ** (n // 2), fact(n))
            coeffs.append(c * rate ** n if c else 0)
        return PowerSeries(tuple(coeffs))
    if name == "sinc":
        if params:
            raise SeriesError("sinc takes no parameters")
        return PowerSeries(tuple(0 if n % 2 else Fraction((-1) ** (n // 2), fact(n + 1))
                                 for n in range(N + 1)))
    if name == "gaussian":
        b = params[0] if params else 1
        return PowerSeries(tuple(0 if n % 2 else _frac((-b) ** (n // 2)) / fact(n // 2)
                                 for n in range(N + 1)))
    # geometric 1/(1+x^2) = (1/2i) [1/(x-i) - 1/(x+i)]
    if params:
        raise SeriesError("geometric takes no parameters")
    c = to_exact(center) if is_exact(center) else complex(center)
    if c * c == -1:
        raise SeriesError("geometric series center sits on a pole (+-i)")
    if c == 0:
        return PowerSeries(tuple(0 if n % 2 else (-1) ** (n // 2) for n in range(N + 1)))
    i = GaussianRational(0, 1) if is_exact(c) else 1j
    coeffs = []
    for n in range(N + 1):
        # 1/(x-p) = -sum (x-c)^n / (p-c)^(n+1)
        term = (-1 / (i - c) ** (n + 1) + 1 / (-i - c) ** (n + 1)) / (2 * i)
        coeffs.append(term)
    return PowerSeries(tuple(coeffs), c)
