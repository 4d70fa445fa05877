"""Operational calculus on kernel expressions: f(nu d) applied to elementary atoms."""

from .atoms import (
    SYMBOLIC,
    ZERO,
    ConstantError,
    ConstantPolicy,
    Dist,
    DivergentError,
    EiAtom,
    KernelError,
    KernelExpr,
    Log,
    Pow,
    antiderivative,
    causal_antiderivative,
    delta,
    derivative,
    evaluate,
    exp_atom,
    heat,
    limit_at,
    multiply_exp,
    multiply_u,
    recip,
    shift,
    theta,
)
from .matrices import OperatorMatrix, commutator_derivative_check, operator_matrix
from .operators import (
    DiffOperator,
    antiderivative_apply,
    apply_series_operator,
    apply_to_exponential,
    delta_semigroup,
    resolvent_apply,
    shift_apply,
)

__all__ = [
    "SYMBOLIC", "ZERO", "ConstantError", "ConstantPolicy", "Dist", "DivergentError",
    "EiAtom", "KernelError", "KernelExpr", "Log", "Pow", "antiderivative",
    "causal_antiderivative", "delta", "derivative", "evaluate", "exp_atom", "heat",
    "limit_at", "multiply_exp", "multiply_u", "recip", "shift", "theta",
    "OperatorMatrix", "commutator_derivative_check", "operator_matrix",
    "DiffOperator", "antiderivative_apply", "apply_series_operator",
    "apply_to_exponential", "delta_semigroup", "resolvent_apply", "shift_apply",
]
