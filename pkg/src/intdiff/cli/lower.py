"""Lower parsed expressions onto the engines' input types."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from ..exact import I, cexp, inverse, is_exact, principal_log, simplify
from ..integrate.integrand import KernelIntegrand, KernelTerm, cos_kernel, exp_term, sin_kernel, x_power
from ..laplace import polyexact as P
from ..laplace.exppoly import ExpPoly
from ..laplace.rational import RationalFunction
from ..opcalc.atoms import is_zero, num
from ..powerseries import PowerSeries, SeriesError, series_arith, series_divide, series_known, series_power
from .expr import CONSTANTS, VARIABLES, BinOp, Call, Neg, Num, Sym, the_variable

SERIES_PAD = 16


class LoweringError(ValueError):
    """The expression is outside the class the requested engine accepts."""


def const_value(e):
    """Exact value of a variable-free expression where possible, else a float/complex."""
    if isinstance(e, Num):
        return simplify(Fraction(e.value))
    if isinstance(e, Sym):
        if e.name == "i":
            return I
        if e.name == "pi":
            return math.pi
        return None
    if isinstance(e, Neg):
        v = const_value(e.arg)
        return None if v is None else num(-v)
    if isinstance(e, BinOp):
        a, b = const_value(e.left), const_value(e.right)
        if a is None or b is None:
            return None
        if e.op == "+":
            return num(a + b)
        if e.op == "-":
            return num(a - b)
        if e.op == "*":
            return num(a * b)
        if e.op == "/":
            if b == 0:
                raise LoweringError("division by zero in a constant")
            return num(a * inverse(b)) if is_exact(a) and is_exact(b) else a / b
        if is_exact(a) and _is_integer(b):
            n = int(b)
            return num(a ** n) if n >= 0 else num(inverse(a) ** -n)
        return _real_if(complex(a) ** complex(b))
    if isinstance(e, Call):
        v = const_value(e.arg)
        if v is None:
            return None
        return _const_call(e.fn, v)
    raise LoweringError(f"cannot evaluate {e!r}")


def _is_integer(v) -> bool:
    return isinstance(v, (int, Fraction)) and Fraction(v).denominator == 1


def _real_if(z: complex):
    return z.real if z.imag == 0 else z


def _const_call(fn, v):
    if is_exact(v) and v == 0:
        exact = {"sin": 0, "cos": 1, "exp": 1, "sinc": 1, "sqrt": 0, "abs": 0}
        if fn in exact:
            return exact[fn]
        raise LoweringError("log(0) is undefined")
    z = complex(v)
    if fn == "sin":
        return _real_if(cmath.sin(z))
    if fn == "cos":
        return _real_if(cmath.cos(z))
    if fn == "exp":
        return _real_if(cmath.exp(z))
    if fn == "sinc":
        return _real_if(cmath.sin(z) / z)
    if fn == "log":
        return _real_if(principal_log(z))
    if fn == "sqrt":
        return _real_if(cmath.sqrt(z))
    return abs(z)


def _check_symbols(e, var):
    if isinstance(e, Sym):
        if e.name in VARIABLES and e.name != var:
            raise LoweringError(f"expression uses {e.name!r} but the variable is {var!r}")
        if e.name not in VARIABLES and e.name not in CONSTANTS:
            raise LoweringError(f"parameter {e.name!r} has no value; pass --param {e.name}=...")
    for child in _children(e):
        _check_symbols(child, var)


def _children(e):
    if isinstance(e, Neg):
        return (e.arg,)
    if isinstance(e, BinOp):
        return (e.left, e.right)
    if isinstance(e, Call):
        return (e.arg,)
    return ()


def _int_exponent(e):
    v = const_value(e)
    return int(v) if _is_integer(v) else None


# series mode -------------------------------------------------------------------

def lower_series(e, N: int, var: str | None = None) -> PowerSeries:
    """Maclaurin expansion to order ``N`` by composing known series."""
    var = var or the_variable(e)
    _check_symbols(e, var)
    s = _series(e, N + SERIES_PAD, var)
    return s.truncate(min(N, s.order))


def _series(e, M, var):
    c = const_value(e)
    if c is not None:
        return PowerSeries.constant(c, M)
    if isinstance(e, Sym):
        return PowerSeries.monomial(1, M)
    if isinstance(e, Neg):
        return -_series(e.arg, M, var)
    if isinstance(e, BinOp):
        if e.op == "^":
            n = _int_exponent(e.right)
            if n is None:
                raise LoweringError("series mode needs constant integer exponents")
            base = _series(e.left, M, var)
            if n < 0 and base[0] == 0:
                raise LoweringError("negative power of a series vanishing at 0 has a pole there")
            return series_power(base, n)
        a, b = _series(e.left, M, var), _series(e.right, M, var)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        try:
            return series_divide(a, b)
        except SeriesError as err:
            raise LoweringError(f"series mode: {err}") from None
    if isinstance(e, Call):
        return _series_call(e.fn, _series(e.arg, M, var), M)
    raise LoweringError(f"cannot expand {e!r}")


def _series_call(fn, u: PowerSeries, M):
    c = u[0]
    g = u - PowerSeries.constant(c, u.order)
    n = u.order
    if fn in ("sin", "cos", "exp", "sinc") and c == 0:
        return series_arith("compose", series_known(fn, (), n), g)
    if fn == "exp":
        return series_arith("compose", series_known("exp", (), n), g) * cexp(c)
    if fn in ("sin", "cos"):
        sin_g = series_arith("compose", series_known("sin", (), n), g)
        cos_g = series_arith("compose", series_known("cos", (), n), g)
        sc, cc = _const_call("sin", c), _const_call("cos", c)
        return sin_g * cc + cos_g * sc if fn == "sin" else cos_g * cc - sin_g * sc
    if fn == "sinc":
        return series_divide(_series_call("sin", u, M), u)
    if c == 0:
        raise LoweringError(f"{fn} is not analytic at 0 (no Maclaurin series)")
    h = g * inverse(c) if is_exact(c) else g * (1 / complex(c))
    if fn == "log":
        coeffs = [0] + [Fraction((-1) ** (k + 1), k) for k in range(1, n + 1)]
        return series_arith("compose", PowerSeries(tuple(coeffs)), h) + _const_call("log", c)
    if fn == "sqrt":
        coeffs, b = [], Fraction(1)
        for k in range(n + 1):
            coeffs.append(b)
            b = b * (Fraction(1, 2) - k) / (k + 1)
        root = _const_call("sqrt", c)
        return series_arith("compose", PowerSeries(tuple(coeffs)), h) * root
    if fn == "abs":
        if complex(c).imag != 0 or any(complex(a).imag != 0 for a in u):
            raise LoweringError("abs of a complex series")
        return u if complex(c).real > 0 else -u
    raise LoweringError(f"unknown function {fn}")


# kernel mode -------------------------------------------------------------------

def lower_kernel(e, var: str | None = None) -> KernelIntegrand:
    """Rewrite into ``x^-m sum w x^j e^{lam x - beta x^2}`` (trig through exponentials)."""
    var = var or the_variable(e)
    _check_symbols(e, var)
    return _kernel(e, var).simplify()


def _kernel(e, var) -> KernelIntegrand:
    c = const_value(e)
    if c is not None:
        return exp_term(0, weight=c)
    if isinstance(e, Sym):
        return x_power(1)
    if isinstance(e, Neg):
        return _kernel(e.arg, var).scale(-1)
    if isinstance(e, BinOp):
        if e.op == "^":
            n = _int_exponent(e.right)
            if n is None:
                raise LoweringError("kernel mode needs constant integer exponents")
            base = _kernel(e.left, var)
            if n < 0:
                return _reciprocal(base, -n)
            out = exp_term(0)
            for _ in range(n):
                out = (out * base).simplify()
            return out
        a = _kernel(e.left, var)
        if e.op == "+":
            return a + _kernel(e.right, var)
        if e.op == "-":
            return a + _kernel(e.right, var).scale(-1)
        if e.op == "*":
            return (a * _kernel(e.right, var)).simplify()
        return (a * _reciprocal(_kernel(e.right, var), 1)).simplify()
    if isinstance(e, Call):
        return _kernel_call(e.fn, _kernel(e.arg, var))
    raise LoweringError(f"cannot rewrite {e!r}")


def _reciprocal(k: KernelIntegrand, n: int) -> KernelIntegrand:
    """``k^-n`` for a monomial ``c x^j``; anything else leaves the class."""
    k = k.simplify()
    if len(k.terms) != 1 or not is_zero(k.terms[0].rate) or not is_zero(k.terms[0].beta):
        raise LoweringError("kernel mode divides only by monomials c*x^j")
    t = k.terms[0]
    power = (t.j - k.m) * n
    w = inverse(t.weight) ** n if is_exact(t.weight) else complex(t.weight) ** -n
    if power >= 0:
        return KernelIntegrand((KernelTerm(w, 0),), power)
    return KernelIntegrand((KernelTerm(w, -power),), 0)


def _polynomial(k: KernelIntegrand, what: str):
    k = k.simplify()
    if k.m or any(not is_zero(t.rate) or not is_zero(t.beta) or t.j > 2 for t in k.terms):
        raise LoweringError(f"{what} needs a polynomial argument of degree <= 2")
    p = [0, 0, 0]
    for t in k.terms:
        p[t.j] = num(p[t.j] + t.weight)
    return p


def _kernel_call(fn, u: KernelIntegrand) -> KernelIntegrand:
    if fn == "exp":
        c0, c1, c2 = _polynomial(u, "exp")
        beta = num(-c2)
        if complex(beta).imag != 0 or complex(beta).real < 0:
            raise LoweringError("exp(c*x^2) needs real c <= 0")
        return exp_term(c1, weight=cexp(c0) if not (is_exact(c0) and c0 == 0) else 1, beta=beta)
    if fn in ("sin", "cos", "sinc"):
        c0, c1, c2 = _polynomial(u, fn)
        if c2 != 0:
            raise LoweringError(f"{fn} of a quadratic is outside the kernel class")
        if fn == "sinc":
            if c0 != 0:
                raise LoweringError("sinc needs an argument w*x")
            return (sin_kernel(c1) * _reciprocal(exp_term(0, j=1, weight=c1), 1)).simplify()
        base = sin_kernel(c1) if fn == "sin" else cos_kernel(c1)
        if c0 == 0:
            return base
        # sin(wx + c) = sin(wx)cos(c) + cos(wx)sin(c)
        sc, cc = _const_call("sin", c0), _const_call("cos", c0)
        other = cos_kernel(c1) if fn == "sin" else sin_kernel(c1)
        return base.scale(cc) + other.scale(sc if fn == "sin" else -sc)
    raise LoweringError(f"{fn} is outside the kernel class (exponential polynomials)")


def lower_exppoly(e, var: str | None = None) -> ExpPoly:
    """Kernel form without Gaussian factors or negative powers, as an ExpPoly."""
    k = lower_kernel(e, var)
    if k.m or k.has_gaussian:
        raise LoweringError("an ExpPoly is a sum of w*x^k*exp(a*x) terms")
    return ExpPoly.from_terms([(t.weight, t.j, t.rate) for t in k.terms])


# rational mode -----------------------------------------------------------------

def lower_rational(e, var: str | None = None) -> RationalFunction:
    var = var or the_variable(e)
    _check_symbols(e, var)
    n, d = _rational(e, var)
    return RationalFunction(n, d)


def _rational(e, var):
    c = const_value(e)
    if c is not None:
        return (c,), (1,)
    if isinstance(e, Sym):
        return (0, 1), (1,)
    if isinstance(e, Neg):
        n, d = _rational(e.arg, var)
        return P.scale(n, -1), d
    if isinstance(e, BinOp):
        if e.op == "^":
            k = _int_exponent(e.right)
            if k is None:
                raise LoweringError("rational mode needs constant integer exponents")
            n, d = _rational(e.left, var)
            if k < 0:
                n, d, k = d, n, -k
                if not d:
                    raise LoweringError("division by zero")
            return P.pow_(n, k), P.pow_(d, k)
        (n1, d1), (n2, d2) = _rational(e.left, var), _rational(e.right, var)
        if e.op == "+":
            return P.add(P.mul(n1, d2), P.mul(n2, d1)), P.mul(d1, d2)
        if e.op == "-":
            return P.sub(P.mul(n1, d2), P.mul(n2, d1)), P.mul(d1, d2)
        if e.op == "*":
            return P.mul(n1, n2), P.mul(d1, d2)
        if not n2:
            raise LoweringError("division by zero")
        return P.mul(n1, d2), P.mul(d1, n2)
    raise LoweringError(f"{getattr(e, 'fn', e)} is not a rational operation")


def reciprocal_image(R: RationalFunction) -> RationalFunction:
    """``R(1/y) / y^2`` for the ``x -> 1/x`` substitution."""
    dn, dd = P.degree(R.num), P.degree(R.den)
    top = max(dn, dd)
    # multiply numerator and denominator by y^top
    num_rev = tuple(reversed(tuple(R.num) + (0,) * (top - dn)))
    den_rev = tuple(reversed(tuple(R.den) + (0,) * (top - dd)))
    return RationalFunction(num_rev, P.mul(den_rev, (0, 0, 1)))


def rational_series(R: RationalFunction, N: int) -> PowerSeries:
    if not R.den or R.den[0] == 0:
        raise LoweringError("rational function has a pole at 0")
    return PowerSeries(tuple(P.series_divide(list(R.num) or [0], list(R.den), N + 1)))


# numeric evaluation ------------------------------------------------------------

def numeric_function(e, var: str | None = None):
    """Plain floating-point evaluation of the tree (used by the quadrature oracle)."""
    var = var or the_variable(e)
    _check_symbols(e, var)
    fns = {"sin": cmath.sin, "cos": cmath.cos, "exp": cmath.exp, "log": cmath.log,
           "sqrt": cmath.sqrt, "abs": abs,
           "sinc": lambda z: 1.0 if z == 0 else cmath.sin(z) / z}

    def ev(node, x):
        if isinstance(node, Num):
            return float(node.value)
        if isinstance(node, Sym):
            if node.name == var:
                return x
            return 1j if node.name == "i" else math.pi
        if isinstance(node, Neg):
            return -ev(node.arg, x)
        if isinstance(node, Call):
            return fns[node.fn](ev(node.arg, x))
        a, b = ev(node.left, x), ev(node.right, x)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if node.op == "/":
            return a / b
        if isinstance(b, complex) and b.imag == 0:
            b = b.real
        if isinstance(b, float) and b == int(b):
            b = int(b)
        return a ** b

    def f(x):
        try:
            v = complex(ev(node_root, x))
            if cmath.isfinite(v):
                return v.real if v.imag == 0 else v
        except (ZeroDivisionError, ValueError, OverflowError):
            pass
        # removable singularity: symmetric average of nearby values
        h = 1e-7 * max(1.0, abs(x))
        v = 0.5 * (complex(ev(node_root, x + h)) + complex(ev(node_root, x - h)))
        return v.real if v.imag == 0 else v

    node_root = e
    return f
