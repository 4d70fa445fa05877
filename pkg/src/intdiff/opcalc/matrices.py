"""Operator matrices on the monomial basis ``1, eps, ..., eps^N``.

Column ``j`` holds the image of ``eps^j``. Entries are Python scalars in an
object array so exact inputs stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exact import is_exact
from ..powerseries import PowerSeries, SeriesError, differentiate
from .atoms import power
from .operators import DiffOperator


@dataclass(frozen=True)
class OperatorMatrix:
    matrix: np.ndarray
    role: str

    @property
    def N(self) -> int:
        return self.matrix.shape[0] - 1

    def __matmul__(self, other):
        return OperatorMatrix(self.matrix.dot(other.matrix), "general")

    def __sub__(self, other):
        return OperatorMatrix(self.matrix - other.matrix, "general")


def _zeros(n):
    m = np.empty((n, n), dtype=object)
    m.fill(0)
    return m


def operator_matrix(opr, N: int) -> OperatorMatrix:
    """``derivative``, ``mult_eps`` or a DiffOperator ``sum c_n nu^n D^n``."""
    if N < 1:
        raise ValueError("matrix order must be at least 1")
    if opr == "derivative":
        d = _zeros(N + 1)
        for m in range(N):
            d[m][m + 1] = m + 1
        return OperatorMatrix(d, "derivative")
    if opr == "mult_eps":
        e = _zeros(N + 1)
        for m in range(N):
            e[m + 1][m] = 1
        return OperatorMatrix(e, "multiply-by-eps")
    if isinstance(opr, PowerSeries):
        opr = DiffOperator(opr)
    if not isinstance(opr, DiffOperator) or not isinstance(opr.symbol, PowerSeries):
        raise TypeError("operator_matrix needs 'derivative', 'mult_eps' or a series operator")
    d = operator_matrix("derivative", N).matrix
    f = opr.symbol
    out = _zeros(N + 1)
    dn = np.identity(N + 1, dtype=int).astype(object)
    for n in range(min(f.order, N) + 1):
        c = f[n]
        if c != 0:
            out = out + (c * power(opr.nu, n)) * dn
        dn = dn.dot(d)
    return OperatorMatrix(out, "general")


def commutator_derivative_check(f: PowerSeries, N: int, nu=1):
    """Residual of ``f'(d) = f(d) eps - eps f(d)`` on degrees ``0..N-K-1``.

    ``K`` is the order of ``f``. Returns exact 0 for exact input when the
    identity holds, otherwise the max-norm of the difference on the window.
    """
    K = f.order
    window = N - K - 1
    if window < 0:
        raise SeriesError(f"window too small: N={N} must exceed the series order {K} by at least 1")
    fm = operator_matrix(DiffOperator(f, nu), N).matrix
    fpm = operator_matrix(DiffOperator(differentiate(f), nu), N).matrix if K > 0 else _zeros(N + 1)
    e = operator_matrix("mult_eps", N).matrix
    # d/dy f(nu y) picks up a factor nu relative to f'(nu y)
    lhs = fpm * nu if nu != 1 else fpm
    diff = lhs - (fm.dot(e) - e.dot(fm))
    block = diff[:, : window + 1]
    vals = list(block.flat)
    if all(is_exact(v) for v in vals):
        if all(v == 0 for v in vals):
            return 0
    return max(abs(complex(v)) for v in vals)
