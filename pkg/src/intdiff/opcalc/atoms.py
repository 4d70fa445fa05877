"""Kernel expressions: linear combinations of elementary atoms in ``eps``.

Every atom is a function of ``u = eps - s`` for a shift ``s``:

``Pow(k, s, rate, theta)``
    ``exp(rate*eps) * u**k``, times ``Theta(u)`` when ``theta`` is set. Covers
    exponentials, reciprocals ``1/eps``, monomials and Heaviside steps.
``Log(k, s)``
    ``u**k * ln(u)`` on the principal branch.
``EiAtom(rate, s)``
    ``ln(u) + E(rate*u)`` with ``E(z) = sum z^n/(n n!)``; its derivative is
    ``exp(rate*u)/u``, so it equals ``Ei(rate*u)`` up to an additive constant.
``Dist(shape, order, s, a, L)``
    ``delta`` (exact), ``gaussian`` of width ``a`` or ``sinc`` of cutoff ``L``
    (with heat ``a``), differentiated ``order`` times (negative: causal
    antiderivatives).

A :class:`KernelExpr` also carries symbolic integration constants: each name
maps to a polynomial in ``eps`` (ascending coefficients) multiplying it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..exact import GaussianRational, cexp, fmt_number, inverse, is_exact, principal_log, simplify
from .regdelta import dist_value, entire_ei_part


class KernelError(ValueError):
    """Operation leaves the atom class."""


class DivergentError(ArithmeticError):
    """A limit or point value does not exist."""


class ConstantError(ArithmeticError):
    """A symbolic integration constant survived to a final value."""


ZERO_TOL = 1e-13


def num(x):
    """Canonical scalar: exact values simplified, floats as float/complex."""
    if isinstance(x, bool):
        return int(x)
    if is_exact(x):
        return simplify(x)
    z = complex(x)
    return z.real if z.imag == 0 else z


def is_zero(x, tol: float = 0.0) -> bool:
    if is_exact(x):
        return x == 0
    return abs(x) <= tol


def ratio(x, n):
    """``x / n`` keeping exact inputs exact."""
    return num(x * inverse(n))


def power(x, n: int):
    if n >= 0:
        return x ** n if not (is_exact(x) and x == 0 and n == 0) else 1
    return inverse(x) ** (-n)


def _is_real(x) -> bool:
    if isinstance(x, GaussianRational):
        return x.im == 0
    if isinstance(x, complex):
        return x.imag == 0
    return True


# atoms ----------------------------------------------------------------------

@dataclass(frozen=True)
class Pow:
    k: int
    s: object = 0
    rate: object = 0
    theta: bool = False

    def __post_init__(self):
        object.__setattr__(self, "s", num(self.s))
        object.__setattr__(self, "rate", num(self.rate))
        if self.k == 0 and not self.theta:
            object.__setattr__(self, "s", 0)

    def __str__(self):
        parts = []
        if not is_zero(self.rate):
            parts.append(f"exp({fmt_number(self.rate)}*eps)")
        u = _u_str(self.s)
        base = u if is_zero(self.s) else _wrap(u)
        if self.k:
            parts.append(base if self.k == 1 else f"{base}^{self.k}")
        if self.theta:
            parts.append(f"Theta{_wrap(u)}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Log:
    k: int
    s: object = 0

    def __post_init__(self):
        object.__setattr__(self, "s", num(self.s))

    def __str__(self):
        u = _u_str(self.s)
        base = u if is_zero(self.s) else _wrap(u)
        pre = "" if self.k == 0 else (f"{base}*" if self.k == 1 else f"{base}^{self.k}*")
        return f"{pre}ln{_wrap(u)}"


@dataclass(frozen=True)
class EiAtom:
    rate: object
    s: object = 0

    def __post_init__(self):
        object.__setattr__(self, "rate", num(self.rate))
        object.__setattr__(self, "s", num(self.s))

    def __str__(self):
        u = _u_str(self.s)
        return f"Ei({fmt_number(self.rate)}*{_wrap(u)})"


@dataclass(frozen=True)
class Dist:
    shape: str
    order: int = 0
    s: object = 0
    a: object = 0
    L: object = None

    def __post_init__(self):
        if self.shape not in ("delta", "gaussian", "sinc"):
            raise KernelError(f"unknown distribution shape {self.shape!r}")
        object.__setattr__(self, "s", num(self.s))
        object.__setattr__(self, "a", num(self.a))
        if self.shape == "delta":
            if self.order < 0:
                raise KernelError("antiderivatives of exact delta are Theta atoms")
            if self.a != 0 or self.L is not None:
                raise KernelError("exact delta carries no width")
        if self.shape == "gaussian" and not complex(self.a).real > 0:
            raise KernelError("gaussian width must be positive")
        if self.shape == "sinc" and (self.L is None or not float(self.L) > 0):
            raise KernelError("sinc cutoff must be positive")

    def __str__(self):
        name = {"delta": "delta", "gaussian": f"G[a={fmt_number(self.a)}]",
                "sinc": f"S[L={fmt_number(self.L)}, b={fmt_number(self.a)}]"}[self.shape]
        if self.order > 0:
            name += f"^({self.order})"
        elif self.order < 0:
            name += f"^({self.order})"
        return f"{name}{_wrap(_u_str(self.s))}"


def _u_str(s):
    if is_zero(s):
        return "eps"
    z = complex(s)
    if (z.imag == 0 and z.real < 0) or (z.real == 0 and z.imag < 0):
        return f"eps + {fmt_number(num(-s))}"
    return f"eps - {fmt_number(s)}"


def _wrap(text):
    return f"({text})"


Atom = object


def delta(s=0, order: int = 0) -> Dist:
    return Dist("delta", order, s)


def theta(s=0) -> Pow:
    return Pow(0, s, 0, True)


def recip(s=0, rate=0) -> Pow:
    return Pow(-1, s, rate)


def exp_atom(rate) -> Pow:
    return Pow(0, 0, rate)


# constant policy -------------------------------------------------------------

@dataclass(frozen=True)
class ConstantPolicy:
    """How ``d^-1`` treats its integration constant.

    ``zero`` drops it, ``symbolic`` introduces a fresh named constant that
    must cancel before any value is produced, ``prescribed`` adds ``value``.
    """

    mode: str = "symbolic"
    value: object = 0

    def __post_init__(self):
        if self.mode not in ("zero", "symbolic", "prescribed"):
            raise ValueError(f"unknown constant policy {self.mode!r}")

    @classmethod
    def parse(cls, text: str) -> "ConstantPolicy":
        text = text.strip()
        if text in ("zero", "symbolic"):
            return cls(text)
        if text.startswith("value="):
            from ..exact import to_exact
            return cls("prescribed", to_exact(text[len("value="):]))
        raise ValueError(f"bad constant policy {text!r}; use zero, symbolic or value=c")


ZERO = ConstantPolicy("zero")
SYMBOLIC = ConstantPolicy("symbolic")


# polynomial helpers for constants --------------------------------------------

def _poly_trim(p):
    p = list(p)
    while p and is_zero(p[-1]):
        p.pop()
    return tuple(num(c) for c in p)


def _poly_add(p, q, scale=1):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) + scale * (q[i] if i < len(q) else 0) for i in range(n)]
    return _poly_trim(out)


def _poly_deriv(p):
    return _poly_trim([i * p[i] for i in range(1, len(p))])


def _poly_shift(p, t):
    out = [0] * len(p)
    for m, c in enumerate(p):
        for j in range(m + 1):
            out[j] += c * math.comb(m, j) * power(t, m - j)
    return _poly_trim(out)


def _poly_eval(p, x):
    v = 0
    for c in reversed(p):
        v = v * x + c
    return v


# the expression ----------------------------------------------------------------

@dataclass(frozen=True)
class KernelExpr:
    """Canonical linear combination ``sum weight*atom`` plus symbolic constants."""

    terms: tuple = ()
    consts: tuple = ()  # ((name, poly coeffs), ...)
    n_consts: int = 0
    _map: dict = field(default=None, compare=False, repr=False, hash=False)

    @classmethod
    def build(cls, pairs, consts=None, n_consts: int = 0) -> "KernelExpr":
        merged: dict = {}
        for atom, w in pairs:
            if is_zero(w):
                continue
            merged[atom] = merged.get(atom, 0) + w
        items = [(a, num(w)) for a, w in merged.items() if not is_zero(w)]
        items.sort(key=lambda aw: _atom_key(aw[0]))
        cs = []
        for name, p in sorted((consts or {}).items()):
            p = _poly_trim(p)
            if p:
                cs.append((name, p))
        return cls(tuple(items), tuple(cs), n_consts)

    @classmethod
    def atom(cls, atom, weight=1) -> "KernelExpr":
        return cls.build([(atom, weight)])

    @classmethod
    def zero(cls) -> "KernelExpr":
        return cls()

    @property
    def const_map(self) -> dict:
        return dict(self.consts)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms and not self.consts

    def weight(self, atom):
        for a, w in self.terms:
            if a == atom:
                return w
        return 0

    def _combine(self, other, scale):
        pairs = list(self.terms) + [(a, scale * w) for a, w in other.terms]
        consts = dict(self.consts)
        for name, p in other.consts:
            consts[name] = _poly_add(consts.get(name, ()), p, scale)
        return KernelExpr.build(pairs, consts, max(self.n_consts, other.n_consts))

    def __add__(self, other):
        if not isinstance(other, KernelExpr):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, KernelExpr):
            return NotImplemented
        return self._combine(other, -1)

    def scale(self, c) -> "KernelExpr":
        if is_zero(c):
            return KernelExpr((), (), self.n_consts)
        return KernelExpr.build([(a, c * w) for a, w in self.terms],
                                {n: tuple(c * x for x in p) for n, p in self.consts},
                                self.n_consts)

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def is_exact(self) -> bool:
        for a, w in self.terms:
            if not is_exact(w):
                return False
        return all(is_exact(c) for _, p in self.consts for c in p)

    def __repr__(self):
        return f"KernelExpr({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for a, w in self.terms:
            parts.append(_term_str(w, str(a)))
        for name, p in self.consts:
            for i, c in enumerate(p):
                sym = name if i == 0 else (f"{name}*eps" if i == 1 else f"{name}*eps^{i}")
                parts.append(_term_str(c, sym))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _term_str(w, sym):
    if w == 1:
        return sym
    if w == -1:
        return "-" + sym
    return f"{fmt_number(w)}*{sym}"


def _atom_key(atom):
    def k(x):
        z = complex(x)
        return (z.real, z.imag)
    if isinstance(atom, Pow):
        return (0, atom.k, k(atom.s), k(atom.rate), atom.theta)
    if isinstance(atom, Log):
        return (1, atom.k, k(atom.s))
    if isinstance(atom, EiAtom):
        return (2, 0, k(atom.s), k(atom.rate))
    return (3, atom.shape, atom.order, k(atom.s), k(atom.a), float(atom.L or 0))


def as_expr(g) -> KernelExpr:
    if isinstance(g, KernelExpr):
        return g
    return KernelExpr.atom(g)


# calculus on atoms -----------------------------------------------------------------

def derivative(g) -> KernelExpr:
    """Exact derivative in ``eps`` (distributional at Theta jumps)."""
    g = as_expr(g)
    pairs = []
    for atom, w in g.terms:
        for a2, w2 in _atom_derivative(atom):
            pairs.append((a2, w * w2))
    consts = {n: _poly_deriv(p) for n, p in g.consts}
    return KernelExpr.build(pairs, consts, g.n_consts)


def _atom_derivative(atom):
    if isinstance(atom, Pow):
        out = []
        if not is_zero(atom.rate):
            out.append((Pow(atom.k, atom.s, atom.rate, atom.theta), atom.rate))
        if atom.k != 0:
            out.append((Pow(atom.k - 1, atom.s, atom.rate, atom.theta), atom.k))
        if atom.theta:
            if atom.k < 0:
                raise KernelError("Theta times a pole has no distributional derivative here")
            if atom.k == 0:
                out.append((Dist("delta", 0, atom.s), cexp(atom.rate * atom.s)))
        return out
    if isinstance(atom, Log):
        if atom.k == 0:
            return [(Pow(-1, atom.s), 1)]
        return [(Log(atom.k - 1, atom.s), atom.k), (Pow(atom.k - 1, atom.s), 1)]
    if isinstance(atom, EiAtom):
        # d/deps = exp(rate*u)/u = exp(-rate*s) * exp(rate*eps)/u
        return [(Pow(-1, atom.s, atom.rate), cexp(-atom.rate * atom.s))]
    return [(Dist(atom.shape, atom.order + 1, atom.s, atom.a, atom.L), 1)]


def _exp_poly_antiderivative(k: int, s, r):
    """Antiderivative of ``exp(r eps) u^k`` for ``r != 0`` as (atom, weight) pairs."""
    if k >= 0:
        # exp(r eps) sum_i (-1)^i k!/(k-i)! u^(k-i) / r^(i+1)
        out = []
        for i in range(k + 1):
            c = (-1) ** i * math.factorial(k) // math.factorial(k - i)
            out.append((Pow(k - i, s, r), c * power(r, -(i + 1))))
        return out
    if k == -1:
        return [(EiAtom(r, s), cexp(r * s))]
    # by parts: int e u^k = e u^(k+1)/(k+1) - r/(k+1) int e u^(k+1)
    out = [(Pow(k + 1, s, r), Fraction(1, k + 1))]
    for a, w in _exp_poly_antiderivative(k + 1, s, r):
        out.append((a, -r * Fraction(1, k + 1) * w))
    return out


def _atom_antiderivative(atom):
    if isinstance(atom, Pow):
        k, s, r = atom.k, atom.s, atom.rate
        if atom.theta:
            if k < 0:
                raise KernelError("Theta times a pole is not integrable at the jump")
            # causal: Theta(u) * (F(eps) - F(s))
            if is_zero(r):
                return [(Pow(k + 1, s, 0, True), Fraction(1, k + 1))]
            out = [(Pow(a.k, a.s, a.rate, True), w) for a, w in _exp_poly_antiderivative(k, s, r)]
            f_at_s = (-1) ** k * math.factorial(k) * power(r, -(k + 1)) * cexp(r * s)
            out.append((Pow(0, s, 0, True), -f_at_s))
            return out
        if is_zero(r):
            if k == -1:
                return [(Log(0, s), 1)]
            return [(Pow(k + 1, s), Fraction(1, k + 1))]
        return _exp_poly_antiderivative(k, s, r)
    if isinstance(atom, Log):
        k = atom.k
        return [(Log(k + 1, atom.s), Fraction(1, k + 1)),
                (Pow(k + 1, atom.s), -Fraction(1, (k + 1) ** 2))]
    if isinstance(atom, EiAtom):
        raise KernelError("no antiderivative of Ei inside the atom class")
    if atom.shape == "delta":
        if atom.order == 0:
            return [(Pow(0, atom.s, 0, True), 1)]
        return [(Dist("delta", atom.order - 1, atom.s), 1)]
    return [(Dist(atom.shape, atom.order - 1, atom.s, atom.a, atom.L), 1)]


def antiderivative(g, policy: ConstantPolicy = SYMBOLIC) -> KernelExpr:
    """``d^-1 g`` with the integration constant handled by ``policy``."""
    g = as_expr(g)
    pairs = []
    for atom, w in g.terms:
        for a2, w2 in _atom_antiderivative(atom):
            pairs.append((a2, w * w2))
    consts = {}
    for name, p in g.consts:
        consts[name] = _poly_trim([0] + [ratio(c, i + 1) for i, c in enumerate(p)])
    n = g.n_consts
    if policy.mode == "symbolic":
        n += 1
        consts[f"c{n}"] = (1,)
    elif policy.mode == "prescribed" and not is_zero(policy.value):
        pairs.append((Pow(0), policy.value))
    return KernelExpr.build(pairs, consts, n)


def causal_antiderivative(g) -> KernelExpr:
    """``int_{-inf}^{eps} g``: defined for Theta-supported atoms and exact deltas."""
    g = as_expr(g)
    if g.consts:
        raise KernelError("causal antiderivative of a symbolic constant diverges")
    pairs = []
    for atom, w in g.terms:
        causal = (isinstance(atom, Pow) and atom.theta) or (
            isinstance(atom, Dist) and atom.shape == "delta")
        if not causal:
            raise KernelError(f"atom {atom} is not supported on a half-line")
        if not _is_real(atom.s):
            raise KernelError("Theta/delta with a complex position")
        for a2, w2 in _atom_antiderivative(atom):
            pairs.append((a2, w * w2))
    return KernelExpr.build(pairs, {}, g.n_consts)


def shift(g, t) -> KernelExpr:
    """``exp(t d) g(eps) = g(eps + t)``, exact on every atom."""
    g = as_expr(g)
    t = num(t)
    if is_zero(t):
        return g
    pairs = []
    for atom, w in g.terms:
        if isinstance(atom, Pow):
            if atom.k == 0 and not atom.theta:
                pairs.append((atom, w * cexp(atom.rate * t)))
            else:
                pairs.append((Pow(atom.k, atom.s - t, atom.rate, atom.theta), w * cexp(atom.rate * t)))
        elif isinstance(atom, Log):
            pairs.append((Log(atom.k, atom.s - t), w))
        elif isinstance(atom, EiAtom):
            pairs.append((EiAtom(atom.rate, atom.s - t), w))
        else:
            pairs.append((Dist(atom.shape, atom.order, atom.s - t, atom.a, atom.L), w))
    consts = {n: _poly_shift(p, t) for n, p in g.consts}
    return KernelExpr.build(pairs, consts, g.n_consts)


def multiply_exp(g, c) -> KernelExpr:
    """``exp(c eps) * g`` for Pow atoms and exact deltas."""
    g = as_expr(g)
    c = num(c)
    if is_zero(c):
        return g
    if g.consts:
        raise KernelError("exponential times a symbolic constant leaves the class")
    pairs = []
    for atom, w in g.terms:
        if isinstance(atom, Pow):
            pairs.append((Pow(atom.k, atom.s, atom.rate + c, atom.theta), w))
        elif isinstance(atom, Dist) and atom.shape == "delta":
            # exp(c eps) delta^(n)(u) = sum_j C(n,j) (-c)^j exp(c s) delta^(n-j)(u)
            n = atom.order
            for j in range(n + 1):
                pairs.append((Dist("delta", n - j, atom.s),
                              w * math.comb(n, j) * power(-c, j) * cexp(c * atom.s)))
        else:
            raise KernelError(f"exponential times {atom} leaves the atom class")
    return KernelExpr.build(pairs, {}, g.n_consts)


def heat(g, beta) -> KernelExpr:
    """``exp(beta d^2) g``: widens deltas into Gaussians (heat semigroup)."""
    g = as_expr(g)
    beta = num(beta)
    if is_zero(beta):
        return g
    if not (_is_real(beta) and complex(beta).real > 0):
        raise KernelError("heat operator needs a positive parameter")
    pairs = []
    for atom, w in g.terms:
        if isinstance(atom, Dist):
            if atom.shape == "delta":
                pairs.append((Dist("gaussian", atom.order, atom.s, beta), w))
            else:
                pairs.append((Dist(atom.shape, atom.order, atom.s, atom.a + beta, atom.L), w))
        elif isinstance(atom, Pow) and atom.theta and is_zero(atom.rate) and atom.k >= 0:
            # u^k Theta(u) = k! * (causal d^-(k+1)) delta
            pairs.append((Dist("gaussian", -(atom.k + 1), atom.s, beta), w * math.factorial(atom.k)))
        elif isinstance(atom, Pow) and atom.k == 0 and not atom.theta and is_zero(atom.rate):
            pairs.append((atom, w))
        elif isinstance(atom, Pow) and atom.k == 0 and not atom.theta:
            pairs.append((atom, w * cexp(beta * atom.rate * atom.rate)))
        else:
            raise KernelError(f"heat operator on {atom} leaves the atom class")
    consts = {}
    for name, p in g.consts:
        acc = p
        out = tuple(p)
        fact = 1
        j = 0
        while acc:
            j += 1
            acc = _poly_deriv(_poly_deriv(acc))
            fact *= j
            out = _poly_add(out, acc, power(beta, j) * Fraction(1, fact))
        consts[name] = out
    return KernelExpr.build(pairs, consts, g.n_consts)


def multiply_u(g) -> KernelExpr:
    """Multiply Gaussian atoms of nonnegative order by their own ``u = eps - s``.

    Uses ``u G^(n) = -2a G^(n+1) - n G^(n-1)``.
    """
    g = as_expr(g)
    pairs = []
    for atom, w in g.terms:
        if not (isinstance(atom, Dist) and atom.shape == "gaussian" and atom.order >= 0):
            raise KernelError("multiply_u is defined for Gaussian atoms only")
        pairs.append((Dist("gaussian", atom.order + 1, atom.s, atom.a), -2 * atom.a * w))
        if atom.order > 0:
            pairs.append((Dist("gaussian", atom.order - 1, atom.s, atom.a), -atom.order * w))
    return KernelExpr.build(pairs, {}, g.n_consts)


# point values and limits ----------------------------------------------------------

def _close_to_zero(u, scale) -> bool:
    if is_exact(u):
        return u == 0
    return abs(u) <= ZERO_TOL * (1.0 + abs(complex(scale)))


def _theta_value(u):
    if not _is_real(u):
        raise KernelError("Theta evaluated at a complex argument")
    return 1 if complex(u).real > 0 else 0


def limit_at(g, point=0, side: str | None = None, const_tol: float = 1e-10):
    """Value of ``g`` as ``eps -> point``.

    ``side`` is ``'+'`` or ``'-'`` for one-sided limits and ``None`` for a
    two-sided limit or plain evaluation. Singular pieces located at the point
    (poles, logarithms) must cancel across atoms; symbolic constants must
    vanish there.
    """
    g = as_expr(g)
    p = num(point)
    values = []
    pole = {}      # power of u -> coefficient (negative powers)
    log_coeff = 0
    theta_jump = 0
    for atom, w in g.terms:
        u = num(p - atom.s)
        at_point = _close_to_zero(u, atom.s)
        if isinstance(atom, Pow):
            k, r = atom.k, atom.rate
            if not at_point:
                if atom.theta and _theta_value(u) == 0:
                    continue
                values.append(w * cexp(r * p) * power(u, k))
                continue
            erp = cexp(r * atom.s)
            if atom.theta:
                if side is None:
                    if k <= 0:
                        theta_jump += abs(complex(w))
                    continue
                if side == "-":
                    continue
            if k >= 1:
                continue
            # exp(r eps) u^k = exp(r s) sum_n r^n u^(n+k) / n!
            for n in range(-k):
                pole[n + k] = pole.get(n + k, 0) + w * erp * power(r, n) * Fraction(1, math.factorial(n))
            values.append(w * erp * power(r, -k) * Fraction(1, math.factorial(-k)))
        elif isinstance(atom, Log):
            if not at_point:
                values.append(w * power(u, atom.k) * principal_log(u))
            elif atom.k == 0:
                log_coeff += w
        elif isinstance(atom, EiAtom):
            if not at_point:
                values.append(w * (principal_log(u) + entire_ei_part(atom.rate * u)))
            else:
                log_coeff += w
        else:
            if atom.shape == "delta":
                if at_point:
                    raise DivergentError(f"exact delta evaluated at its support point ({atom})")
                continue
            values.append(w * dist_value(atom.shape, atom.order, u, atom.a, atom.L))
    scale = max([abs(complex(v)) for v in values] + [1.0])
    if theta_jump:
        raise DivergentError("Theta jump at the evaluation point needs a one-sided limit")
    for power_, c in sorted(pole.items()):
        if not is_zero(c, 1e-12 * scale):
            raise DivergentError(f"non-cancelling pole of order {-power_} at eps={fmt_number(p)}")
    if not is_zero(log_coeff, 1e-12 * scale):
        raise DivergentError(f"logarithmic divergence at eps={fmt_number(p)}")
    surviving = []
    for name, poly in g.consts:
        v = _poly_eval(poly, p)
        if not is_zero(v, const_tol * scale):
            surviving.append(name)
    if surviving:
        raise ConstantError(
            "non-cancelling integration constant / pole prescription required "
            f"(constants {', '.join(surviving)} survive)")
    return _sum(values)


def _sum(values):
    exact = [v for v in values if is_exact(v)]
    inexact = [complex(v) for v in values if not is_exact(v)]
    total = sum(exact, 0)
    if inexact:
        re = math.fsum(v.real for v in inexact)
        im = math.fsum(v.imag for v in inexact)
        total = complex(total) + complex(re, im)
        return num(total)
    return num(total)


def evaluate(g, point):
    """Plain value at ``point`` (a two-sided limit)."""
    return limit_at(g, point, None)
