"""Run configuration: every option the commands read, with defaults."""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from fractions import Fraction

COMMANDS = ("integrate", "fourier", "laplace", "invlaplace", "spectrum", "ftc-check", "selftest")
DOMAINS = ("finite", "half+", "half-", "real")
ROUTE_CHOICES = ("auto", "series", "delta", "w", "two-sided", "kernel")
FORMATS = ("table", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    command: str = "integrate"
    tol: float = 1e-9
    order: int | None = None
    reg: str | None = None
    route: str = "auto"
    format: str = "table"
    constant: str = "symbolic"
    domain: str | None = None
    lower: str | None = None
    upper: str | None = None
    params: dict = field(default_factory=dict)
    oracle: bool = False
    figure: str | None = None
    at: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.route not in ROUTE_CHOICES:
            raise ValueError(f"unknown route {self.route!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.reg not in (None, "gaussian", "sinc"):
            raise ValueError(f"unknown regularization {self.reg!r}")
        if self.domain not in (None,) + DOMAINS:
            raise ValueError(f"unknown domain {self.domain!r}")
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")
        if self.order is not None and self.order < 0:
            raise ValueError("order must be nonnegative")

    @classmethod
    def from_mapping(cls, data: dict) -> "RunConfig":
        """Build from a plain mapping; unknown keys are an error."""
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown configuration keys: {', '.join(sorted(unknown))}")
        return cls(**data)

    def resolved_domain(self) -> str:
        """``finite`` when both endpoints are given, otherwise the explicit domain."""
        if self.domain is not None:
            return self.domain
        if self.lower is not None and self.upper is not None:
            return "finite"
        raise ValueError("give --domain, or --from and --to for a finite interval")

    def with_updates(self, **kw) -> "RunConfig":
        return replace(self, **kw)


def parse_param(text: str):
    """``name=value`` with an exact rational value (decimal or p/q)."""
    if "=" not in text:
        raise ValueError(f"parameter {text!r} must look like name=value")
    name, value = (s.strip() for s in text.split("=", 1))
    if not name.isidentifier():
        raise ValueError(f"bad parameter name {name!r}")
    return name, Fraction(value)
