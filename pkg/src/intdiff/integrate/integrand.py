"""Integrands of the exponential-polynomial kernel class.

A :class:`KernelIntegrand` is ``x^(-m) * sum_t w_t x^(j_t) exp(lam_t x - beta_t x^2)``.
Trig functions enter through ``sin(wx) = (e^{iwx} - e^{-iwx}) / 2i``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..exact import I, is_exact
from ..opcalc.atoms import Dist, KernelExpr, Pow, is_zero, multiply_u, num, power


@dataclass(frozen=True)
class KernelTerm:
    weight: object
    j: int = 0
    rate: object = 0
    beta: object = 0

    def __post_init__(self):
        object.__setattr__(self, "weight", num(self.weight))
        object.__setattr__(self, "rate", num(self.rate))
        object.__setattr__(self, "beta", num(self.beta))
        if self.j < 0:
            raise ValueError("term powers are nonnegative; use the shared x^-m factor")
        if not complex(self.beta).imag == 0 or complex(self.beta).real < 0:
            raise ValueError("Gaussian factor needs real beta >= 0")


@dataclass(frozen=True)
class KernelIntegrand:
    terms: tuple = ()
    m: int = 0
    label: str = field(default="", compare=False)

    def __post_init__(self):
        merged: dict = {}
        for t in self.terms:
            key = (t.j, t.rate, t.beta)
            merged[key] = merged.get(key, 0) + t.weight
        terms = tuple(KernelTerm(w, j, r, b) for (j, r, b), w in merged.items() if not is_zero(w))
        terms = tuple(sorted(terms, key=lambda t: (t.j, complex(t.rate).imag,
                                                  complex(t.rate).real, complex(t.beta).real)))
        object.__setattr__(self, "terms", terms)
        if self.m < 0:
            raise ValueError("m counts a reciprocal power and must be >= 0")

    # construction ---------------------------------------------------------
    @classmethod
    def from_terms(cls, terms, m: int = 0, label: str = "") -> "KernelIntegrand":
        return cls(tuple(KernelTerm(*t) if not isinstance(t, KernelTerm) else t for t in terms), m, label)

    def __add__(self, other):
        if self.m != other.m:
            lo, hi = (self, other) if self.m < other.m else (other, self)
            lo = lo.raise_m(hi.m - lo.m)
            return KernelIntegrand(lo.terms + hi.terms, hi.m)
        return KernelIntegrand(self.terms + other.terms, self.m)

    def raise_m(self, d: int) -> "KernelIntegrand":
        """Same function written with ``x^-(m+d)``."""
        return KernelIntegrand(tuple(KernelTerm(t.weight, t.j + d, t.rate, t.beta)
                                     for t in self.terms), self.m + d)

    def scale(self, c) -> "KernelIntegrand":
        return KernelIntegrand(tuple(KernelTerm(c * t.weight, t.j, t.rate, t.beta)
                                     for t in self.terms), self.m)

    def __mul__(self, other):
        if not isinstance(other, KernelIntegrand):
            return self.scale(other)
        out = []
        for a in self.terms:
            for b in other.terms:
                out.append(KernelTerm(a.weight * b.weight, a.j + b.j,
                                      a.rate + b.rate, a.beta + b.beta))
        return KernelIntegrand(tuple(out), self.m + other.m)

    def simplify(self) -> "KernelIntegrand":
        """Cancel common powers of x between the terms and ``x^-m``."""
        if not self.terms or self.m == 0:
            return self
        d = min(min(t.j for t in self.terms), self.m)
        if d == 0:
            return self
        return KernelIntegrand(tuple(KernelTerm(t.weight, t.j - d, t.rate, t.beta)
                                     for t in self.terms), self.m - d, self.label)

    def reflect(self) -> "KernelIntegrand":
        """``f(-x)``."""
        sign_m = (-1) ** self.m
        return KernelIntegrand(tuple(KernelTerm(t.weight * sign_m * (-1) ** t.j, t.j, -t.rate, t.beta)
                                     for t in self.terms), self.m, self.label)

    def substitute_scale(self, c) -> "KernelIntegrand":
        """``f(c x)`` for real ``c``."""
        return KernelIntegrand(tuple(KernelTerm(t.weight * power(c, t.j - self.m), t.j,
                                                t.rate * c, t.beta * c * c)
                                     for t in self.terms), self.m, self.label)

    # queries ----------------------------------------------------------------
    @property
    def has_gaussian(self) -> bool:
        return any(not is_zero(t.beta) for t in self.terms)

    def frequencies(self) -> list:
        """Distinct nonzero |Im rate| values of terms without a Gaussian factor."""
        out = set()
        for t in self.terms:
            w = abs(complex(t.rate).imag)
            if w and is_zero(t.beta):
                im = t.rate.imag if is_exact(t.rate) else complex(t.rate).imag
                out.add(abs(num(im)))
        return sorted(out, key=float)

    def taylor_at_zero(self, n: int) -> list:
        """Maclaurin coefficients ``0..n`` of the numerator ``sum w x^j e^{lam x - beta x^2}``."""
        coeffs = [0] * (n + 1)
        for t in self.terms:
            # e^{lam x} e^{-beta x^2} product of two exponential series
            e1 = [power(t.rate, k) * Fraction(1, math.factorial(k)) if is_exact(t.rate)
                  else t.rate ** k / math.factorial(k) for k in range(n + 1)]
            for k in range(n + 1 - t.j):
                c = 0
                for q in range(k // 2 + 1):
                    g = power(-t.beta, q) * Fraction(1, math.factorial(q)) if is_exact(t.beta) \
                        else (-t.beta) ** q / math.factorial(q)
                    c += g * e1[k - 2 * q]
                coeffs[k + t.j] += t.weight * c
        return [num(c) for c in coeffs]

    def check_integrable_at_zero(self):
        """The numerator must vanish to order ``m`` at 0."""
        if self.m == 0:
            return
        low = self.taylor_at_zero(self.m - 1)
        scale = max(abs(complex(t.weight)) for t in self.terms) if self.terms else 1.0
        for k, c in enumerate(low):
            if not is_zero(c, 1e-12 * scale):
                from ..opcalc.atoms import DivergentError
                raise DivergentError(
                    f"integrand behaves like x^{k - self.m} at 0 and is not integrable there")

    def __call__(self, x):
        """Numeric value; Taylor expansion near 0 avoids cancellation."""
        x = complex(x)
        if self.m and abs(x) < 0.05:
            coeffs = self.taylor_at_zero(self.m + 16)
            if any(not is_zero(c, 1e-14) for c in coeffs[: self.m]):
                if x == 0:
                    raise ZeroDivisionError("integrand singular at 0")
            else:
                v = 0j
                for c in reversed(coeffs[self.m:]):
                    v = v * x + complex(c)
                return _real_if(v)
        total = 0j
        for t in self.terms:
            total += complex(t.weight) * x ** t.j * cmath.exp(complex(t.rate) * x - complex(t.beta) * x * x)
        if self.m:
            total /= x ** self.m
        return _real_if(total)

    def __str__(self):
        parts = []
        for t in self.terms:
            bits = [str(t.weight)]
            if t.j:
                bits.append(f"x^{t.j}")
            if not is_zero(t.rate):
                bits.append(f"exp({t.rate}*x)")
            if not is_zero(t.beta):
                bits.append(f"exp(-{t.beta}*x^2)")
            parts.append("*".join(bits))
        body = " + ".join(parts) or "0"
        return f"({body})/x^{self.m}" if self.m else body


def _real_if(v: complex):
    return v.real if abs(v.imag) <= 1e-15 * max(1.0, abs(v.real)) else v


# builders --------------------------------------------------------------------

def exp_term(rate=0, weight=1, j=0, beta=0) -> KernelIntegrand:
    return KernelIntegrand((KernelTerm(weight, j, rate, beta),))


def sin_kernel(w=1) -> KernelIntegrand:
    h = num(1 / (2 * I)) if is_exact(w) else 1 / 2j
    iw = num(I * w) if is_exact(w) else 1j * w
    return KernelIntegrand((KernelTerm(h, 0, iw), KernelTerm(-h, 0, num(-iw))))


def cos_kernel(w=1) -> KernelIntegrand:
    iw = num(I * w) if is_exact(w) else 1j * w
    half = Fraction(1, 2)
    return KernelIntegrand((KernelTerm(half, 0, iw), KernelTerm(half, 0, num(-iw))))


def x_power(j: int) -> KernelIntegrand:
    if j >= 0:
        return KernelIntegrand((KernelTerm(1, j),))
    return KernelIntegrand((KernelTerm(1, 0),), -j)


def sinc_kernel() -> KernelIntegrand:
    return (sin_kernel(1) * x_power(-1)).simplify()


def gaussian_kernel(beta=1) -> KernelIntegrand:
    return KernelIntegrand((KernelTerm(1, 0, 0, beta),))


def function_kernel(f: KernelIntegrand) -> KernelExpr:
    """``f(eps)`` itself as a KernelExpr.

    Plain terms become ``Pow(j - m, 0, lam)``; Gaussian terms are completed to
    a square and written with Gaussian atoms of width ``1/(4 beta)``.
    """
    pairs = []
    out = KernelExpr()
    for t in f.terms:
        if is_zero(t.beta):
            pairs.append((Pow(t.j - f.m, 0, t.rate), t.weight))
            continue
        if f.m:
            from ..opcalc.atoms import KernelError
            raise KernelError("Gaussian factor combined with x^-m is outside the class")
        beta = complex(t.beta).real
        lam = complex(t.rate)
        c = lam / (2 * beta)
        a = 1 / (4 * beta)
        pref = complex(t.weight) * cmath.exp(lam * lam / (4 * beta)) * math.sqrt(math.pi / beta)
        g = KernelExpr.atom(Dist("gaussian", 0, c, a), pref)
        # x = u + c, applied j times
        for _ in range(t.j):
            g = multiply_u(g) + g.scale(c)
        out = out + g
    return out + KernelExpr.build(pairs)
