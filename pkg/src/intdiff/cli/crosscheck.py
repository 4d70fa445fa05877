"""Quadrature cross-checks computed from the expression tree alone.

Nothing here goes through the lowering used by the engines: the integrand
is evaluated pointwise and handed to the oracle.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..oracle import QuadResult, quad_finite, quad_unbounded
from .expr import BinOp, Call, Neg
from .lower import numeric_function


def expr_frequencies(e, var: str) -> list:
    """Angular frequencies of trig calls with linear arguments (``None`` if some are not)."""
    out = []
    if isinstance(e, Call):
        if e.fn in ("sin", "cos", "sinc"):
            g = numeric_function(e.arg, var)
            w = complex(g(1.0)) - complex(g(0.0))
            if abs(complex(g(2.0)) - complex(g(1.0)) - w) > 1e-12 * max(1.0, abs(w)) or w.imag:
                return None
            out.append(abs(w.real))
        sub = expr_frequencies(e.arg, var)
        return None if sub is None else out + sub
    children = (e.arg,) if isinstance(e, Neg) else (e.left, e.right) if isinstance(e, BinOp) else ()
    for c in children:
        sub = expr_frequencies(c, var)
        if sub is None:
            return None
        out += sub
    return out


def _period(freqs) -> float:
    """``2 pi / g`` for the largest ``g`` dividing all frequencies (rational to 1e-12)."""
    fr = [Fraction(w).limit_denominator(1000) for w in freqs if w > 0]
    if not fr or any(abs(float(f) - w) > 1e-12 for f, w in zip(fr, [w for w in freqs if w > 0])):
        return math.pi
    den = math.lcm(*(f.denominator for f in fr))
    g = math.gcd(*(int(f * den) for f in fr))
    return 2 * math.pi / (g / den)


def oracle_integral(e, var: str, domain: str, a=None, b=None, tol: float = 1e-11) -> QuadResult:
    """Independent value of the integral of ``e`` over ``[a, b]``, a half-line or the real line."""
    f = numeric_function(e, var)
    if domain == "finite":
        return quad_finite(f, float(a), float(b), tol=tol)
    freqs = expr_frequencies(e, var) or []
    period = _period(freqs)
    dom = {"half+": "half_line", "half-": "negative_half_line", "real": "real_line"}[domain]
    return quad_unbounded(f, dom, tol=tol, period=period)
