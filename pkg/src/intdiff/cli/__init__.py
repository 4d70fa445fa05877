"""Command-line layer: expression parsing, lowering, commands and reports."""

from .commands import run_command
from .config import RunConfig
from .expr import ExprSyntaxError, parse_expression, to_text
from .lower import (LoweringError, lower_exppoly, lower_kernel, lower_rational,
                    lower_series, numeric_function)
from .report import Report, render

__all__ = ["run_command", "RunConfig", "ExprSyntaxError", "parse_expression", "to_text",
           "LoweringError", "lower_exppoly", "lower_kernel", "lower_rational", "lower_series",
           "numeric_function", "Report", "render"]
