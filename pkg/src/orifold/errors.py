"""Exception types shared across the package.

Every error raised on purpose derives from :class:`OrifoldError` and carries
a short machine-readable ``kind`` used by the service layer and the CLI to
map failures onto HTTP payloads and exit codes.
"""

from __future__ import annotations


class OrifoldError(Exception):
    """Base class for all errors raised by this package."""

    kind = "error"


class DomainError(OrifoldError, ValueError):
    """An input violates a model invariant (out-of-range angle, bad parameter)."""

    kind = "domain"

    def __init__(self, message: str, *, param: str | None = None, value=None):
        super().__init__(message)
        self.param = param
        self.value = value


class SingularityError(DomainError):
    """The equilibrium denominator vanishes; no physical configuration exists."""

    kind = "singularity"

    def __init__(self, message: str, *, critical_theta_deg: float | None = None):
        super().__init__(message, param="theta")
        self.critical_theta_deg = critical_theta_deg


class InfeasibleError(DomainError):
    """A requested target lies outside the reachable set of the mechanism."""

    kind = "infeasible"

    def __init__(self, message: str, *, reachable: tuple[float, float] | None = None):
        super().__init__(message)
        self.reachable = reachable


class ConfigError(OrifoldError, ValueError):
    """A configuration document failed to parse or validate."""

    kind = "config"

    def __init__(self, message: str, *, field: str | None = None,
                 line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.field = field
        self.line = line
        self.column = column


class ClampWarning(UserWarning):
    """Calibrated extrapolation left the valid fold range and was clamped."""
