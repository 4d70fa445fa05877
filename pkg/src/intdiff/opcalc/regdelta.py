"""Point values of regularized delta functions and their derivatives.

Two families stand in for ``delta(u)``:

* gaussian, width ``a > 0``: ``G_a(u) = exp(-u^2/4a) / sqrt(4 pi a)``, the heat
  kernel ``exp(a d^2) delta``;
* sinc, cutoff ``L > 0`` and optional heat ``b >= 0``:
  ``S(u) = (1/2pi) int_{-L}^{L} exp(-b k^2) exp(i k u) dk``, which for ``b = 0``
  is ``sin(L u) / (pi u)``.

``order`` n >= 0 is the n-th derivative; negative orders are iterated
antiderivatives anchored at ``u -> -inf``.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.special

from ..oracle import special_eval


class RegularizationError(ValueError):
    pass


def _as_number(u):
    u = complex(u)
    return u.real if u.imag == 0 else u


def _erf(z):
    if isinstance(z, complex):
        return complex(scipy.special.erf(z))
    return math.erf(z)


def _exp(z):
    return cmath.exp(z) if isinstance(z, complex) else math.exp(z)


def gaussian_value(order: int, u, a) -> complex | float:
    """``d^order G_a(u)`` (or iterated antiderivative for negative order)."""
    a = float(a)
    if a <= 0:
        raise RegularizationError("gaussian width must be positive")
    u = _as_number(u)
    g = _exp(-u * u / (4 * a)) / math.sqrt(4 * math.pi * a)
    if order >= 0:
        # G^(n)(u) = (-1/(2 sqrt a))^n H_n(u / (2 sqrt a)) G(u), physicists' Hermite
        x = u / (2 * math.sqrt(a))
        h_prev, h = 0.0, 1.0
        for n in range(order):
            h_prev, h = h, 2 * x * h - 2 * n * h_prev
        return (-1 / (2 * math.sqrt(a))) ** order * h * g
    # I_1 = Phi, and k I_{k+1} = u I_k + 2a I_{k-1} with I_0 = G
    i_prev = g
    i_cur = 0.5 * (1 + _erf(u / (2 * math.sqrt(a))))
    for k in range(1, -order):
        i_prev, i_cur = i_cur, (u * i_cur + 2 * a * i_prev) / k
    return i_cur


def _legendre_nodes(n):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def sinc_value(order: int, u, L, heat=0) -> complex | float:
    """``d^order S(u)`` for the band-limited (sinc) delta of cutoff ``L``."""
    L = float(L)
    b = float(heat)
    if L <= 0:
        raise RegularizationError("sinc cutoff must be positive")
    if b < 0:
        raise RegularizationError("heat parameter must be nonnegative")
    u = _as_number(u)
    if b > 0:
        # exp(-b k^2) is below e^-60 of its peak beyond this cutoff
        g = abs(complex(u).imag) + 1.0
        L = min(L, (g + math.sqrt(g * g + 4 * b * (60 + 2 * max(order, 0)))) / (2 * b))
    if order >= 0:
        # Gauss-Legendre on [-L, L]; node count follows the oscillation count
        n = int(64 + 2 * L * abs(complex(u)) / math.pi + 8 * order)
        n = min(n, 4000)
        x, w = _legendre_nodes(n)
        k = L * x
        vals = (1j * k) ** order * np.exp(-b * k * k) * np.exp(1j * k * complex(u))
        out = complex(L * np.dot(w, vals) / (2 * math.pi))
        # S is real on the real axis, so are its derivatives
        return out.real if isinstance(u, float) else out
    if order == -1:
        if b == 0:
            return 0.5 + special_si(L * u) / math.pi
        # 1/2 + (1/pi) int_0^L exp(-b k^2) sin(k u)/k dk
        n = int(64 + 2 * L * abs(complex(u)) / math.pi)
        x, w = _legendre_nodes(min(n, 4000))
        k = 0.5 * L * (x + 1)
        vals = np.exp(-b * k * k) * np.sin(k * complex(u)) / k
        val = 0.5 + complex(0.5 * L * np.dot(w, vals)) / math.pi
        return val.real if isinstance(u, float) else val
    if order == -2 and b == 0:
        s1 = sinc_value(-1, u, L)
        return u * s1 + (cmath.cos(L * u) if isinstance(u, complex) else math.cos(L * u)) / (math.pi * L)
    raise RegularizationError(
        "sinc regularization supports antiderivative orders -1, and -2 without heat")


def special_si(z):
    """Sine integral ``Si(z)``."""
    if isinstance(z, complex):
        return complex(scipy.special.sici(z)[0])
    return float(scipy.special.sici(z)[0])


def dist_value(shape: str, order: int, u, a=0, L=None):
    if shape == "gaussian":
        return gaussian_value(order, u, a)
    if shape == "sinc":
        return sinc_value(order, u, L, a)
    raise RegularizationError(f"no point values for {shape!r}")


def entire_ei_part(z):
    """``E(z) = sum z^n / (n n!)``, the entire part of the exponential integral.

    Uses the series for ``|z| < 2`` and the oracle's ``Ei`` otherwise,
    ``E(z) = Ei(z) - gamma - log z`` (``log|z|`` on the negative real axis,
    where ``Ei`` is real).
    """
    z = complex(z)
    if abs(z) < 2.0:
        total = 0j
        term = 1 + 0j
        for n in range(1, 80):
            term *= z / n
            total += term / n
            if abs(term) < 1e-18:
                break
        return total.real if z.imag == 0 else total
    gamma = 0.57721566490153286061
    if z.imag == 0:
        x = z.real
        return special_eval("Ei", x) - gamma - math.log(abs(x))
    return complex(special_eval("Ei", z)) - gamma - cmath.log(z)
