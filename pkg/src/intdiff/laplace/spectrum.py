"""Heat traces and the spectral comb ``s(l) = sum_n w_n delta(l - l_n)``."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..exact import is_exact, simplify
from ..opcalc.atoms import as_expr, delta, num, shift
from ..opcalc.regdelta import gaussian_value, sinc_value
from .exppoly import ExpPoly


@dataclass(frozen=True)
class SpectralComb:
    """Lines ``(rate, weight)``; sorted by rate, duplicates merged."""

    lines: tuple = ()

    def __post_init__(self):
        merged: dict = {}
        for rate, weight in self.lines:
            rate, weight = num(rate), num(weight)
            for v, what in ((rate, "rate"), (weight, "weight")):
                z = complex(v)
                if z.imag != 0 or not z.real > 0:
                    raise ValueError(f"comb {what} must be a positive real, got {v}")
            merged[rate] = merged.get(rate, 0) + weight
        lines = tuple(sorted(((r, simplify(w) if is_exact(w) else w) for r, w in merged.items()),
                             key=lambda rw: float(complex(rw[0]).real)))
        object.__setattr__(self, "lines", lines)

    @property
    def rates(self) -> list:
        return [r for r, _ in self.lines]

    @property
    def total_weight(self):
        return sum((w for _, w in self.lines), 0)

    def __len__(self):
        return len(self.lines)

    def trace(self) -> ExpPoly:
        """``h(t) = sum w e^{-l t}`` as an ExpPoly in ``t``."""
        return ExpPoly(tuple(((0, -r), w) for r, w in self.lines))


def heat_trace(spec: SpectralComb, t) -> float:
    """``sum w_n e^{-l_n t}`` with the largest term ``e^{-l_1 t}`` factored out."""
    if not float(t) > 0:
        raise ValueError("heat trace needs t > 0")
    if not spec.lines:
        return 0.0
    t = float(t)
    r0 = float(spec.lines[0][0])
    rest = math.fsum(float(w) * math.exp(-(float(r) - r0) * t) for r, w in spec.lines)
    return math.exp(-r0 * t) * rest


def spectrum_recover(h: ExpPoly) -> SpectralComb:
    """Inverse Laplace in the rate: ``w e^{-l t} -> w e^{-l d} delta = w delta(. - l)``."""
    lines = []
    for (k, rate), w in h.terms:
        if k != 0:
            raise ValueError("heat trace terms must be pure exponentials (k = 0)")
        lam = num(-rate)
        z = complex(lam)
        if z.imag != 0 or not z.real > 0:
            raise ValueError(f"rate {lam} is not positive")
        line = shift(as_expr(delta()), num(-lam))
        ((atom, _),) = line.terms
        lines.append((atom.s, w))
    return SpectralComb(tuple(lines))


def comb_render(spec: SpectralComb, reg, grid) -> list:
    """``sum w_n delta_reg(l - l_n)`` sampled on ``grid`` (width ``reg.start``)."""
    out = []
    for x in grid:
        total = 0.0
        for r, w in spec.lines:
            u = float(x) - float(r)
            if reg.shape == "gaussian":
                total += float(w) * gaussian_value(0, u, reg.start)
            else:
                total += float(w) * sinc_value(0, u, reg.start)
        out.append(total)
    return out
