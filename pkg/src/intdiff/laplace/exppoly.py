"""Exponential polynomials ``sum w x^k e^{a x}`` on ``x > 0``."""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from ..exact import GaussianRational, fmt_number, is_exact, real_if_close, simplify
from ..opcalc.atoms import KernelError, KernelExpr, Pow, _sum, is_zero, num


@dataclass(frozen=True)
class ExpPoly:
    """``terms`` maps ``(k, rate)`` to a weight; the function is implicitly times ``Theta(x)``."""

    terms: tuple = ()

    def __post_init__(self):
        merged: dict = {}
        for (k, rate), w in self.terms:
            if k < 0:
                raise ValueError("powers of x in an ExpPoly are nonnegative")
            key = (k, num(rate))
            merged[key] = merged.get(key, 0) + num(w)
        items = [(key, num(w)) for key, w in merged.items() if not is_zero(w)]
        items.sort(key=lambda it: (complex(it[0][1]).real, complex(it[0][1]).imag, it[0][0]))
        object.__setattr__(self, "terms", tuple(items))

    @classmethod
    def from_terms(cls, triples) -> "ExpPoly":
        """From ``(weight, k, rate)`` triples."""
        return cls(tuple(((k, rate), w) for w, k, rate in triples))

    @classmethod
    def constant(cls, c) -> "ExpPoly":
        return cls((((0, 0), c),))

    @property
    def weights(self) -> dict:
        return dict(self.terms)

    def __add__(self, other):
        return ExpPoly(self.terms + other.terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "ExpPoly":
        return ExpPoly(tuple((key, c * w) for key, w in self.terms))

    def __eq__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def is_exact(self) -> bool:
        return all(is_exact(w) and is_exact(r) for (_, r), w in self.terms)

    def is_real(self, tol: float = 1e-13) -> bool:
        """Conjugate-symmetric weights, so the function is real on ``x > 0``."""
        table = self.weights
        for (k, r), w in self.terms:
            partner = table.get((k, _conj(r)))
            if partner is None:
                return False
            if is_exact(w) and is_exact(partner):
                if _conj(w) != partner:
                    return False
            elif abs(complex(w).conjugate() - complex(partner)) > tol * max(1.0, abs(complex(w))):
                return False
        return True

    def value_at_zero(self):
        """Limit ``x -> 0+``: the sum of the ``k = 0`` weights."""
        return simplify(sum((w for (k, _), w in self.terms if k == 0), 0))

    def __call__(self, x):
        if x == 0:
            return self.value_at_zero()
        x = float(x)
        if x < 0:
            return 0.0
        vals = [complex(w) * x ** k * cmath.exp(complex(r) * x) for (k, r), w in self.terms]
        v = _sum(vals) if vals else 0.0
        return real_if_close(v) if self.is_real() else complex(v)

    def to_kernel(self) -> KernelExpr:
        return KernelExpr.build([(Pow(k, 0, r, theta=True), w) for (k, r), w in self.terms])

    @classmethod
    def from_kernel(cls, g: KernelExpr) -> "ExpPoly":
        if g.consts:
            raise KernelError("symbolic constants are not part of an ExpPoly")
        items = []
        for atom, w in g.terms:
            if not (isinstance(atom, Pow) and atom.theta and atom.k >= 0 and is_zero(atom.s)):
                raise KernelError(f"{atom} is not an x^k e^(ax) Theta(x) term")
            items.append(((atom.k, atom.rate), w))
        return cls(tuple(items))

    def __str__(self):
        return exppoly_str(self)


def _conj(z):
    if isinstance(z, GaussianRational):
        return simplify(z.conjugate())
    if is_exact(z):
        return z
    return complex(z).conjugate() if isinstance(z, complex) else z


def _xpow(k):
    return "" if k == 0 else ("x" if k == 1 else f"x^{k}")


def _factor(coef, body):
    if not body:
        return fmt_number(coef)
    if coef == 1:
        return body
    if coef == -1:
        return f"-{body}"
    return f"{fmt_number(coef)}*{body}"


def _exp_str(rate):
    if is_zero(rate):
        return ""
    if rate == 1 or rate == -1:
        return "exp(x)" if rate == 1 else "exp(-x)"
    return f"exp({fmt_number(rate)}*x)"


def _join(*bits):
    return "*".join(b for b in bits if b)


def exppoly_str(f: ExpPoly) -> str:
    """Real form when conjugate pairs are present: ``2 Re(w e^{(s+it)x})``."""
    if not f.terms:
        return "0"
    done = set()
    parts = []
    table = f.weights
    for (k, r), w in f.terms:
        if (k, r) in done:
            continue
        done.add((k, r))
        rc = complex(r)
        partner = (k, _conj(r))
        if rc.imag != 0 and partner in table and f.is_real():
            done.add(partner)
            if rc.imag < 0:
                r, w = _conj(r), table[partner]
            re_r = r.real if isinstance(r, GaussianRational) else rc.real
            im_r = r.imag if isinstance(r, GaussianRational) else abs(rc.imag)
            cw = w.real if isinstance(w, GaussianRational) else complex(w).real
            sw = w.imag if isinstance(w, GaussianRational) else complex(w).imag
            env = _exp_str(simplify(re_r))
            arg = "x" if im_r == 1 else f"{fmt_number(simplify(im_r))}*x"
            if cw != 0:
                parts.append(_factor(simplify(2 * cw), _join(_xpow(k), env, f"cos({arg})")))
            if sw != 0:
                parts.append(_factor(simplify(-2 * sw), _join(_xpow(k), env, f"sin({arg})")))
            continue
        env = _exp_str(r)
        parts.append(_factor(w, _join(_xpow(k), env)))
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def max_abs_difference(f: ExpPoly, g: ExpPoly, grid) -> float:
    return max((abs(complex(f(x)) - complex(g(x))) for x in grid), default=0.0)


def default_grid(n: int = 200, upper: float = 10.0) -> list:
    """``n`` points spread over ``(0, upper]``."""
    return [upper * (i + 1) / n for i in range(n)]
