"""Exact scalars: rationals and Gaussian rationals.

The operator routes keep coefficients exact for as long as the inputs allow
(shifts by ``i``, weights such as ``1/(2i)``), and demote to ``complex`` the
moment a transcendental factor appears. ``Fraction`` covers the real case;
:class:`GaussianRational` covers ``p + q i`` with rational ``p, q``.
"""

from __future__ import annotations

import cmath
import math
import numbers
from fractions import Fraction
from typing import Union


class GaussianRational:
    """Immutable ``re + im*i`` with ``Fraction`` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # conversions -----------------------------------------------------
    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __float__(self):
        if self.im:
            raise TypeError("cannot convert non-real GaussianRational to float")
        return float(self.re)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        mag = abs(self.im)
        unit = "i" if mag == 1 else f"{mag}i"
        if not self.re:
            return unit if self.im > 0 else f"-{unit}"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{unit})"

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    # arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __abs__(self):
        return abs(complex(self))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) + other
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) - other
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return other - complex(self)
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) * other
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) / other
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational((self.re * o.re + self.im * o.im) / den,
                                (self.im * o.re - self.re * o.im) / den)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return other / complex(self)
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return complex(self) ** n
        if n < 0:
            return GaussianRational(1) / (self ** (-n))
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


numbers.Complex.register(GaussianRational)

I = GaussianRational(0, 1)

Scalar = Union[int, Fraction, GaussianRational, float, complex]


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, GaussianRational)) and not isinstance(x, bool)


def simplify(x):
    """Canonical exact form: drop a zero imaginary part, integral Fractions to int."""
    if isinstance(x, GaussianRational):
        if x.im == 0:
            x = x.re
        else:
            return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def to_exact(x, max_denominator: int | None = None):
    """Convert a number to exact form.

    Floats are converted by their exact binary value unless
    ``max_denominator`` is given, in which case the closest rational with a
    bounded denominator is used (``Fraction.limit_denominator``).
    """
    if isinstance(x, bool):
        return int(x)
    if is_exact(x):
        return simplify(x)
    if isinstance(x, str):
        return simplify(parse_exact(x))
    z = complex(x)

    def conv(v):
        f = Fraction(v)
        return f.limit_denominator(max_denominator) if max_denominator else f

    return simplify(GaussianRational(conv(z.real), conv(z.imag)))


def parse_exact(text: str):
    """Parse ``'2.5'``, ``'1/3'``, ``'1+2i'``-free decimal/rational text."""
    text = text.strip()
    if text.endswith(("i", "j")):
        body = text[:-1] or "1"
        return GaussianRational(0, Fraction(body))
    return Fraction(text)


def to_complex(x) -> complex:
    return complex(x)


def cexp(z):
    """exp that stays exact at 0."""
    if is_exact(z) and z == 0:
        return 1
    return cmath.exp(complex(z))


def exact_zero(x, atol: float = 0.0) -> bool:
    if is_exact(x):
        return x == 0
    return abs(x) <= atol


def principal_log(z) -> complex:
    """Principal logarithm with ``Im`` in ``(-pi, pi]``.

    Negative reals map to ``+i*pi`` regardless of the sign of a zero imaginary
    part picked up by float subtraction.
    """
    z = complex(z)
    if z.imag == 0:
        z = complex(z.real, 0.0)
    if z == 0:
        raise ValueError("logarithm of zero")
    return cmath.log(z)


def real_if_close(z, tol: float = 1e-13):
    z = complex(z)
    if abs(z.imag) <= tol * max(1.0, abs(z.real)):
        return z.real
    return z


def fmt_number(x) -> str:
    """Human-readable form used by reports and printers."""
    if isinstance(x, GaussianRational):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        if x.imag == 0:
            return repr(x.real)
        return f"({x.real!r}{'+' if x.imag >= 0 else '-'}{abs(x.imag)!r}i)"
    if isinstance(x, float) and math.isfinite(x) and x == int(x) and abs(x) < 1e15:
        return repr(x)
    return str(x)


def inverse(x):
    """``1/x`` keeping exact inputs exact."""
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Fraction(1) / x
    if isinstance(x, GaussianRational):
        return GaussianRational(1) / x
    return 1 / x
