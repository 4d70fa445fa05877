"""Richardson (polynomial) extrapolation of a regularized schedule to h -> 0."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..opcalc.atoms import DivergentError


@dataclass(frozen=True)
class ConvergenceRow:
    step: int
    parameter: float
    estimate: complex
    delta_prev: float
    bound: float


@dataclass(frozen=True)
class Extrapolation:
    value: complex
    error: float
    rows: tuple
    raw: tuple

    def deltas(self) -> list:
        return [r.delta_prev for r in self.rows[1:]]


def richardson(hs, values, parameters=None) -> Extrapolation:
    """Neville tableau in ``h``, best entry chosen Ridders-style.

    Row ``i`` reports the diagonal entry using the first ``i+1`` points, its
    change from the previous diagonal, and the smallest error estimate seen
    so far. The returned value is the tableau entry with the smallest
    estimate ``max(|T[i][j]-T[i][j-1]|, |T[i][j]-T[i-1][j-1]|)``.
    """
    if len(hs) != len(values) or not hs:
        raise ValueError("schedule and values must be nonempty and aligned")
    parameters = list(parameters) if parameters is not None else list(hs)
    values = [complex(v) for v in values]
    _check_divergence(values)
    n = len(hs)
    table = [[values[i]] for i in range(n)]
    best, best_err = values[0], math.inf
    rows = []
    prev_diag = None
    for i in range(n):
        for j in range(1, i + 1):
            hi, hj = hs[i], hs[i - j]
            t = (hj * table[i][j - 1] - hi * table[i - 1][j - 1]) / (hj - hi)
            table[i].append(t)
            err = max(abs(t - table[i][j - 1]), abs(t - table[i - 1][j - 1]))
            if err < best_err:
                best, best_err = t, err
        diag = table[i][i]
        if i == 0:
            rows.append(ConvergenceRow(0, float(parameters[0]), diag, math.inf, math.inf))
        else:
            delta = abs(diag - prev_diag)
            if delta < best_err and best_err == math.inf:
                best, best_err = diag, delta
            rows.append(ConvergenceRow(i, float(parameters[i]), diag, delta, best_err))
        prev_diag = diag
    if n == 1:
        best_err = math.inf
    return Extrapolation(best, best_err, tuple(rows), tuple(values))


def _check_divergence(values):
    first = abs(values[0])
    mags = [abs(v) for v in values]
    growing = all(mags[i + 1] > mags[i] for i in range(len(mags) - 1))
    if len(mags) > 1 and growing and mags[-1] > 1e6 * max(first, 1e-300):
        raise DivergentError("regularized estimates grow without bound (divergent integral)")


def consecutive_decreases(deltas, floor: float = 1e-12) -> int:
    """Longest run of deltas that shrink, or sit at the rounding floor."""
    best = run = 0
    for a, b in zip(deltas, deltas[1:]):
        if b < a or (a <= floor and b <= floor):
            run += 1
            best = max(best, run)
        else:
            run = 0
    return best
