"""Integral representations as operations returning diagnosed results."""

from .extrapolate import ConvergenceRow, Extrapolation, consecutive_decreases, richardson
from .integrand import (
    KernelIntegrand,
    KernelTerm,
    cos_kernel,
    exp_term,
    function_kernel,
    gaussian_kernel,
    sin_kernel,
    sinc_kernel,
    x_power,
)
from .kernel import (
    apply_integrand_operator,
    delta_kernel,
    delta_semigroup,
    fourier_kernel,
    fourier_transform,
    integrate_finite_kernel,
    integrate_half_line,
    integrate_real_line,
    integrate_two_sided,
)
from .result import ROUTES, IntegralResult, RegScheme, frequency_gcd
from .series import (
    accelerate_partial_sums,
    integrate_finite,
    integrate_finite_split,
    kernel_series,
    real_line_pieces,
    series_partial_sums,
)

__all__ = [
    "ConvergenceRow", "Extrapolation", "consecutive_decreases", "richardson",
    "KernelIntegrand", "KernelTerm", "cos_kernel", "exp_term", "function_kernel",
    "gaussian_kernel", "sin_kernel", "sinc_kernel", "x_power",
    "apply_integrand_operator", "delta_kernel", "delta_semigroup", "fourier_kernel",
    "fourier_transform", "integrate_finite_kernel", "integrate_half_line",
    "integrate_real_line", "integrate_two_sided",
    "ROUTES", "IntegralResult", "RegScheme", "frequency_gcd",
    "accelerate_partial_sums", "integrate_finite", "integrate_finite_split",
    "kernel_series", "real_line_pieces", "series_partial_sums",
]
