"""Rational functions with exact coefficients and their complex partial fractions."""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from ..exact import fmt_number, inverse, is_exact, simplify, to_exact
from . import polyexact as P

DEFAULT_POLE_CAP = 8


@dataclass(frozen=True)
class PoleTerm:
    """``coeff / (x - pole)^order``."""

    pole: object
    order: int
    coeff: object


@dataclass(frozen=True)
class RationalFunction:
    """``num(x) / den(x)``, reduced so that ``gcd(num, den) = 1`` and ``den`` is monic."""

    num: tuple
    den: tuple

    def __post_init__(self):
        n = P.trim(to_exact(c) for c in self.num)
        d = P.trim(to_exact(c) for c in self.den)
        if not d:
            raise ZeroDivisionError("denominator is the zero polynomial")
        g = P.gcd(n, d) if n else d
        if P.degree(g) > 0:
            n, d = P.divmod_(n, g)[0], P.divmod_(d, g)[0]
        if not n:
            d = (1,)
        n, d = P.scale(n, inverse(d[-1])), P.monic(d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @classmethod
    def from_poles(cls, terms) -> "RationalFunction":
        """Recombine ``sum coeff / (x - pole)^order`` over a common denominator."""
        orders: dict = {}
        for t in terms:
            orders[t.pole] = max(orders.get(t.pole, 0), t.order)
        den = (1,)
        for a, k in orders.items():
            den = P.mul(den, P.pow_(P.linear(a), k))
        num = ()
        for t in terms:
            cof = P.divmod_(den, P.pow_(P.linear(t.pole), t.order))[0]
            num = P.add(num, P.scale(cof, t.coeff))
        return cls(num, den)

    @property
    def proper(self) -> bool:
        return P.degree(self.num) < P.degree(self.den)

    @property
    def real_coefficients(self) -> bool:
        return all(complex(c).imag == 0 for c in self.num + self.den)

    def __call__(self, x):
        return P.evaluate(self.num, x) / P.evaluate(self.den, x)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return P.sub(P.mul(self.num, other.den), P.mul(other.num, self.den)) == ()

    def __hash__(self):
        return hash((self.num, self.den))

    def partial_fractions(self, pole_cap: int = DEFAULT_POLE_CAP) -> list:
        """``[PoleTerm]`` for a proper function; exact for exactly located poles."""
        if not self.proper:
            raise ValueError("partial fractions need a proper rational function")
        out = []
        for a, m in P.roots(self.den):
            if m > pole_cap:
                raise ValueError(f"pole of order {m} at {a} exceeds the cap {pole_cap}")
            out.extend(_pole_terms(self.num, self.den, a, m))
        return out

    def __str__(self):
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"


def _pole_terms(num, den, a, m):
    """Principal part at ``a``: Taylor data of ``num / (den / (x-a)^m)``."""
    if is_exact(a):
        n_t = P.taylor_at(num, a)
        d_t = P.taylor_at(den, a)
        q = d_t[m:]
        coeffs = P.series_divide(n_t, q, m)
        return [PoleTerm(a, m - j, simplify(c)) for j, c in enumerate(coeffs) if c != 0]
    with mpmath.workdps(50):
        am = mpmath.mpc(complex(a))
        n_t = P.taylor_at([P._mp(c) for c in num], am)
        d_t = P.taylor_at([P._mp(c) for c in den], am)
        coeffs = P.series_divide(n_t, d_t[m:], m)
        return [PoleTerm(a, m - j, complex(c)) for j, c in enumerate(coeffs)]


def _poly_str(p) -> str:
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        x = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not x:
            parts.append(fmt_number(c))
        elif c == 1:
            parts.append(x)
        else:
            parts.append(f"{fmt_number(c)}*{x}")
    return " + ".join(reversed(parts))
