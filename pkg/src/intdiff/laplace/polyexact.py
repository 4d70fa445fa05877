"""Dense univariate polynomials with exact (Gaussian rational) coefficients.

A polynomial is a tuple of coefficients in ascending order; ``()`` is zero.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np

from ..exact import GaussianRational, inverse, is_exact, simplify, to_exact


class PolynomialError(ValueError):
    pass


def trim(p) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(simplify(c) if is_exact(c) else c for c in p)


def degree(p) -> int:
    return len(trim(p)) - 1


def add(p, q, scale=1) -> tuple:
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else 0
        b = q[i] if i < len(q) else 0
        out.append(a + scale * b)
    return trim(out)


def sub(p, q) -> tuple:
    return add(p, q, -1)


def mul(p, q) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p, c) -> tuple:
    return trim(c * a for a in p)


def linear(a) -> tuple:
    """``x - a``."""
    return trim((-a, 1))


def pow_(p, n: int) -> tuple:
    out = (1,)
    for _ in range(n):
        out = mul(out, p)
    return out


def evaluate(p, x):
    v = 0
    for c in reversed(p):
        v = v * x + c
    return v


def deriv(p) -> tuple:
    return trim(k * p[k] for k in range(1, len(p)))


def divmod_(p, q):
    """Exact long division ``p = d q + r`` with ``deg r < deg q``."""
    p, q = list(trim(p)), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = inverse(q[-1])
    dq = len(q) - 1
    if len(p) - 1 < dq:
        return (), trim(p)
    quot = [0] * (len(p) - dq)
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i] * lead_inv
        quot[i - dq] = c
        if c == 0:
            continue
        for j in range(dq + 1):
            p[i - dq + j] -= c * q[j]
    return trim(quot), trim(p[:dq])


def monic(p) -> tuple:
    p = trim(p)
    return scale(p, inverse(p[-1])) if p else p


def gcd(p, q) -> tuple:
    """Monic gcd by the Euclidean algorithm (exact coefficients only)."""
    p, q = trim(p), trim(q)
    if not all(is_exact(c) for c in p + q):
        raise PolynomialError("gcd needs exact coefficients")
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p) if p else (1,)


def squarefree(p) -> list:
    """Yun's algorithm: ``[(factor, multiplicity)]`` with squarefree monic factors."""
    p = monic(p)
    if degree(p) < 1:
        return []
    out = []
    dp = deriv(p)
    a = gcd(p, dp)
    b = divmod_(p, a)[0]
    c = divmod_(dp, a)[0]
    d = sub(c, deriv(b))
    i = 1
    while degree(b) > 0:
        a = gcd(b, d)
        if degree(a) > 0:
            out.append((a, i))
        b = divmod_(b, a)[0]
        c = divmod_(d, a)[0]
        d = sub(c, deriv(b))
        i += 1
    return out


def norm(p) -> float:
    return max(abs(complex(c)) for c in p) if p else 0.0


def _numeric_roots(p) -> list:
    """Companion-matrix eigenvalues polished by Newton steps at 50 digits."""
    coeffs = [complex(c) for c in trim(p)]
    n = len(coeffs) - 1
    if n == 1:
        return [-coeffs[0] / coeffs[1]]
    comp = np.zeros((n, n), dtype=complex)
    comp[1:, :-1] = np.eye(n - 1)
    comp[:, -1] = [-c / coeffs[-1] for c in coeffs[:-1]]
    guesses = np.linalg.eigvals(comp)
    exact_coeffs = [_mp(c) for c in trim(p)]
    roots = []
    with mpmath.workdps(50):
        for g in guesses:
            z = mpmath.mpc(complex(g))
            for _ in range(60):
                f = mpmath.polyval(exact_coeffs[::-1], z)
                df = mpmath.polyval([k * c for k, c in enumerate(exact_coeffs)][1:][::-1], z)
                if df == 0:
                    break
                step = f / df
                z -= step
                if abs(step) <= mpmath.mpf(10) ** -45 * (1 + abs(z)):
                    break
            roots.append(complex(z))
    return roots


def _mp(c):
    if is_exact(c):
        g = GaussianRational(c) if not isinstance(c, GaussianRational) else c
        return mpmath.mpc(mpmath.mpf(g.re.numerator) / g.re.denominator,
                          mpmath.mpf(g.im.numerator) / g.im.denominator)
    return mpmath.mpc(complex(c))


def _snap(z: complex, p, max_den: int = 10 ** 6):
    """Exact Gaussian rational root if one is within reach and verifies exactly."""
    cand = GaussianRational(Fraction(z.real).limit_denominator(max_den),
                            Fraction(z.imag).limit_denominator(max_den))
    if evaluate(p, cand) == 0:
        return simplify(cand)
    return None


def roots(p) -> list:
    """``[(root, multiplicity)]``; roots exact when representable, else checked floats.

    Inexact roots must satisfy ``|p(r)| < 1e-12 * norm(p)`` after polishing.
    """
    p = trim(p)
    if not p:
        raise PolynomialError("the zero polynomial has no isolated roots")
    if degree(p) < 1:
        return []
    if not all(is_exact(c) for c in p):
        p = trim(to_exact(c) for c in p)
    out = []
    for factor, mult in squarefree(p):
        rest = factor
        for z in _numeric_roots(factor):
            r = _snap(z, rest) if degree(rest) > 0 else None
            if r is not None:
                out.append((r, mult))
                rest = divmod_(rest, linear(r))[0]
                continue
            residual = abs(complex(mpmath.polyval([_mp(c) for c in factor][::-1], mpmath.mpc(z))))
            if residual >= 1e-12 * norm(factor) * max(1.0, abs(z)) ** degree(factor):
                raise PolynomialError(f"root {z} failed the residual check ({residual:.3g})")
            out.append((z, mult))
    return out


def taylor_at(p, a) -> list:
    """Coefficients of ``p(a + t)`` in ``t``."""
    n = len(p)
    out = []
    for j in range(n):
        s = 0
        for m in range(j, n):
            if p[m] != 0:
                s += p[m] * math.comb(m, j) * a ** (m - j)
        out.append(s)
    return out


def series_divide(num, den, n: int) -> list:
    """First ``n`` coefficients of ``num(t) / den(t)`` (``den[0] != 0``)."""
    if den[0] == 0:
        raise ZeroDivisionError("series division needs a nonzero constant term")
    inv0 = inverse(den[0])
    out = []
    for k in range(n):
        s = num[k] if k < len(num) else 0
        for j in range(1, k + 1):
            if j < len(den):
                s -= den[j] * out[k - j]
        out.append(s * inv0)
    return out
