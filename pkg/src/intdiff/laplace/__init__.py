"""Forward and inverse Laplace transforms by differentiation, and heat-trace spectra."""

from .exppoly import ExpPoly, default_grid, exppoly_str, max_abs_difference
from .polyexact import PolynomialError
from .rational import DEFAULT_POLE_CAP, PoleTerm, RationalFunction
from .spectrum import SpectralComb, comb_render, heat_trace, spectrum_recover
from .transforms import (
    AsymptoticSeriesWarning,
    kernel_to_rational,
    laplace_forward,
    laplace_inverse_rational,
    laplace_kernel,
    laplace_roundtrip,
    laplace_roundtrip_check,
)

__all__ = [
    "ExpPoly", "default_grid", "exppoly_str", "max_abs_difference", "PolynomialError",
    "DEFAULT_POLE_CAP", "PoleTerm", "RationalFunction", "SpectralComb", "comb_render",
    "heat_trace", "spectrum_recover", "AsymptoticSeriesWarning", "kernel_to_rational",
    "laplace_forward", "laplace_inverse_rational", "laplace_kernel", "laplace_roundtrip",
    "laplace_roundtrip_check",
]
