"""Result and regularization-schedule types shared by the integration routes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

ROUTES = (
    "finite-series",
    "finite-series-split",
    "finite-kernel",
    "half-line",
    "two-sided",
    "delta-exact",
    "delta-gaussian",
    "delta-sinc",
    "w",
    "fourier-exact",
    "fourier-gaussian",
    "fourier-sinc",
)


@dataclass(frozen=True)
class IntegralResult:
    """Value of an integral plus the evidence behind it.

    ``diagnostics`` always has ``order`` (truncation order or ``None``),
    ``steps`` (convergence rows) and ``tail`` (error bound, ``0`` for exact
    symbolic routes, ``inf`` when no bound exists).
    """

    value: complex
    route: str
    diagnostics: dict = field(default_factory=dict)
    oracle_delta: float | None = None
    tol: float = 1e-10

    def __post_init__(self):
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")
        object.__setattr__(self, "value", complex(self.value))
        d = dict(self.diagnostics)
        d.setdefault("order", None)
        d.setdefault("steps", ())
        d.setdefault("tail", math.inf)
        object.__setattr__(self, "diagnostics", d)

    @property
    def tail(self) -> float:
        return float(self.diagnostics["tail"])

    @property
    def verified(self) -> bool:
        t = self.tail
        return math.isfinite(t) and t <= self.tol

    @property
    def exact(self):
        """Exact symbolic value text when the route produced one."""
        return self.diagnostics.get("exact")

    def with_oracle(self, oracle_value) -> "IntegralResult":
        return replace(self, oracle_delta=abs(complex(oracle_value) - self.value))


@dataclass(frozen=True)
class RegScheme:
    """Regularized delta and its extrapolation schedule.

    ``gaussian``: widths ``a_k = start * factor^k`` (factor < 1), extrapolated
    in ``h = a^h_exponent``: ``1/2`` when the transform may have kinks (odd
    powers of the smoothing length), ``1`` for smooth transforms. ``sinc``: cutoffs ``L_k = start * factor^k`` (factor > 1),
    extrapolated in ``h = 1/L``.
    """

    shape: str
    start: float
    factor: float = 0.5
    depth: int = 4
    extrapolation: str = "richardson"
    h_exponent: float = 0.5

    def __post_init__(self):
        if self.shape not in ("gaussian", "sinc"):
            raise ValueError("regularization shape must be gaussian or sinc")
        if not self.start > 0:
            raise ValueError("width/cutoff must be positive")
        if self.shape == "gaussian" and not 0 < self.factor < 1:
            raise ValueError("gaussian schedule must shrink (0 < factor < 1)")
        if self.shape == "sinc" and not self.factor > 1:
            raise ValueError("sinc schedule must grow (factor > 1)")
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        if self.extrapolation not in ("none", "richardson"):
            raise ValueError("extrapolation is none or richardson")

    @property
    def schedule(self) -> list:
        return [self.start * self.factor ** k for k in range(self.depth + 1)]

    @property
    def hs(self) -> list:
        if self.shape == "gaussian":
            return [a ** self.h_exponent for a in self.schedule]
        return [1.0 / L for L in self.schedule]

    @classmethod
    def for_integrand(cls, shape: str, integrand, depth: int = 4) -> "RegScheme":
        """Default schedule adapted to the integrand's frequencies.

        Gaussian: ``a0 = w_min^2 / 16`` for oscillatory terms (so the
        exponentially small error ``exp(-w^2/4a)`` is resolved), ``1/16``
        otherwise. Sinc: ``L0`` is four periods of the common base frequency,
        which lines every cutoff up with ``cos(w L) = 1``.
        """
        freqs = integrand.frequencies()
        if shape == "gaussian":
            a0 = 1 / 16
            if freqs and not integrand.has_gaussian:
                a0 = min(a0, float(freqs[0]) ** 2 / 16)
            # x^-m factors are what make the transform piecewise smooth
            return cls("gaussian", a0, 0.5, depth, h_exponent=0.5 if integrand.m else 1.0)
        base = frequency_gcd(freqs)
        L0 = 4 * 2 * math.pi / base if base else 8 * math.pi
        return cls("sinc", L0, 2.0, depth)


def frequency_gcd(freqs):
    """Largest ``g`` with every frequency an integer multiple of it (rationals only)."""
    fr = []
    for w in freqs:
        if isinstance(w, (int, Fraction)):
            fr.append(Fraction(w))
        else:
            f = Fraction(float(w)).limit_denominator(1000)
            if abs(float(f) - float(w)) > 1e-12:
                return None
            fr.append(f)
    if not fr:
        return None
    den = 1
    for f in fr:
        den = den * f.denominator // math.gcd(den, f.denominator)
    g = 0
    for f in fr:
        g = math.gcd(g, int(f * den))
    return float(Fraction(g, den))
