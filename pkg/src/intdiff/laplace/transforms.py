"""Laplace transforms by differentiation.

``L[f](x) = f(-d_x) (1/x)`` and ``L^-1[f](x) = f(d_x) delta(x)``; the inverse
of ``1/(x-a)`` is the resolvent ``int_0^inf e^{aw} delta(x-w) dw = e^{ax}``.
"""

from __future__ import annotations

import math
import warnings

from ..exact import is_exact
from ..opcalc.atoms import KernelError, KernelExpr, Pow, delta, derivative, evaluate, num, recip, shift
from ..opcalc.operators import resolvent_apply
from ..powerseries import PowerSeries
from .exppoly import ExpPoly, default_grid, max_abs_difference
from .rational import DEFAULT_POLE_CAP, PoleTerm, RationalFunction


class AsymptoticSeriesWarning(UserWarning):
    """Term-wise transform of a non-polynomial series: asymptotic, do not sum naively."""


def _recip_derivatives(k: int, cache: dict):
    """``(-d)^k (1/x) = k!/x^{k+1}``, memoized."""
    if k not in cache:
        prev = _recip_derivatives(k - 1, cache) if k else None
        cache[k] = KernelExpr.atom(recip()) if k == 0 else -derivative(prev)
    return cache[k]


def laplace_kernel(f: ExpPoly) -> KernelExpr:
    """Symbolic ``L[f]`` in ``x``: ``x^k e^{ay} -> e^{-a d}(-d)^k 1/x = k!/(x-a)^{k+1}``."""
    cache: dict = {}
    out = KernelExpr()
    for (k, a), w in f.terms:
        out = out + shift(_recip_derivatives(k, cache), num(-a)).scale(w)
    return out


def laplace_forward(f, x=None, polynomial: bool = False):
    """``L[f]`` symbolically (``x=None``) or at a point ``x``.

    ``f`` is an ExpPoly or a PowerSeries. A PowerSeries maps term-wise to
    ``sum c_n n!/x^{n+1}``; unless ``polynomial`` is set this is an asymptotic
    series, flagged with :class:`AsymptoticSeriesWarning` and evaluated by
    optimal truncation (stop before the smallest term).
    """
    if isinstance(f, PowerSeries):
        return _series_forward(f, x, polynomial)
    if not isinstance(f, ExpPoly):
        raise TypeError("laplace_forward takes an ExpPoly or a PowerSeries")
    expr = laplace_kernel(f)
    if x is None:
        return expr
    for (_, a), _w in f.terms:
        if not complex(x).imag == 0 or not float(complex(x).real) > complex(a).real:
            raise ValueError(f"x = {x} is outside the region of convergence (need x > Re {a})")
    return evaluate(expr, x)


def _series_forward(f: PowerSeries, x, polynomial: bool):
    if f.center != 0:
        raise ValueError("term-wise Laplace transform needs a Maclaurin series")
    if not polynomial:
        warnings.warn("term-wise Laplace image of a non-polynomial series is asymptotic; "
                      "do not sum naively", AsymptoticSeriesWarning, stacklevel=3)
    pairs = [(Pow(-(n + 1)), f[n] * math.factorial(n)) for n in range(f.order + 1) if f[n] != 0]
    expr = KernelExpr.build(pairs)
    if x is None:
        return expr
    if not float(x) > 0:
        raise ValueError("the monomial transforms need x > 0")
    total, best = 0, math.inf
    for n in range(f.order + 1):
        term = f[n] * math.factorial(n) / num(x) ** (n + 1) if is_exact(x) else \
            complex(f[n]) * math.factorial(n) / complex(x) ** (n + 1)
        size = abs(complex(term))
        if not polynomial and size > best:
            break
        total = total + term
        if size:
            best = size
    return num(total)


def kernel_to_rational(g: KernelExpr) -> RationalFunction:
    """Recombine a sum of ``c/(x-a)^k`` atoms into one rational function."""
    if g.consts:
        raise KernelError("symbolic constants have no rational form")
    terms = []
    for atom, w in g.terms:
        if not (isinstance(atom, Pow) and atom.k < 0 and not atom.theta and atom.rate == 0):
            raise KernelError(f"{atom} is not a pole term c/(x-a)^k")
        terms.append(PoleTerm(atom.s, -atom.k, w))
    return RationalFunction.from_poles(terms)


def laplace_inverse_rational(R: RationalFunction, pole_cap: int = DEFAULT_POLE_CAP) -> ExpPoly:
    """``R(d_x) delta(x)`` for proper ``R``: each ``1/(x-a)^{k}`` is ``k`` resolvents on delta."""
    if not isinstance(R, RationalFunction):
        raise TypeError("laplace_inverse_rational takes a RationalFunction")
    if not R.proper:
        raise ValueError("improper rational function: the polynomial part would need "
                         "derivatives of delta")
    chains: dict = {}
    out = KernelExpr()
    for t in R.partial_fractions(pole_cap):
        chain = chains.setdefault(t.pole, [KernelExpr.atom(delta())])
        while len(chain) <= t.order:
            chain.append(resolvent_apply(t.pole, chain[-1]))
        out = out + chain[t.order].scale(t.coeff)
    return ExpPoly.from_kernel(out)


def laplace_roundtrip(f: ExpPoly) -> ExpPoly:
    """``L^-1[L[f]]`` through the recombined rational function."""
    for (_, a), _w in f.terms:
        if not complex(a).real < 0:
            raise ValueError("round-trip check needs rates with negative real part")
    return laplace_inverse_rational(kernel_to_rational(laplace_kernel(f)))


def laplace_roundtrip_check(f: ExpPoly, tol: float = 1e-12, grid=None) -> float:
    """Max ``|L^-1[L[f]] - f|`` over a grid in ``(0, 10]``.

    Exact inputs return exactly ``0`` when the symbolic round trip reproduces
    ``f`` term for term.
    """
    back = laplace_roundtrip(f)
    if f.is_exact() and back == f:
        return 0
    err = max_abs_difference(back, f, grid or default_grid())
    if err > tol:
        warnings.warn(f"round trip differs by {err:.3g} > tol {tol:.3g}", RuntimeWarning, stacklevel=2)
    return err
