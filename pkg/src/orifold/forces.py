"""Static equilibrium of one folded half-unit under lateral cable tension.

The facet is idealized as a rigid beam leaning at theta/2 against a
frictionless roller at the top and resting on a base with friction
coefficient mu, with a lateral force F_l applied at mid-height.  Solving
the planar balance (sum F_x = sum F_y = sum M = 0 with F_a = mu R_a)
for the vertical load N gives

    N = [(mg/2) sin(theta/2) - mu m g cos(theta/2) - (F_l/2) cos(theta/2)]
        / [mu cos(theta/2) - sin(theta/2)]

which is the upward tactile force the structure can counterbalance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SingularityError, InfeasibleError
from .geometry import FoldParams, _check_theta, cos_half_deg, sin_half_deg

DEFAULT_GRAVITY = 9.81  # m/s^2

#: Default width of the rejected band around the critical angle, applied to
#: the denominator mu cos(theta/2) - sin(theta/2).
SINGULARITY_TOL = 1e-9


@dataclass(frozen=True)
class LoadCase:
    """Applied loads: vertical load (N), beam mass (kg), base friction
    coefficient, lateral cable force (N) and gravity (m/s^2)."""

    load_n: float = 0.0
    beam_mass: float = 0.0
    mu: float = 0.0
    lateral_force: float = 0.0
    gravity: float = DEFAULT_GRAVITY

    def __post_init__(self):
        for name in ("load_n", "beam_mass", "mu", "lateral_force"):
            v = getattr(self, name)
            if not v >= 0.0:
                raise DomainError(f"{name} must be >= 0, got {v}",
                                  param=name, value=v)
        if not self.gravity > 0.0:
            raise DomainError(f"gravity must be > 0 m/s^2, got {self.gravity}",
                              param="gravity", value=self.gravity)


@dataclass(frozen=True)
class EquilibriumResult:
    """Solved equilibrium: vertical force N, reactions (base normal R_a,
    wall reaction R_b, base friction F_a, all newtons) and the beam
    geometry h = p cos(theta/2), q = p sin(theta/2) in mm.

    ``flagged`` is True when the solved vertical force is negative: the
    structure cannot supply an upward force at this configuration."""

    vertical_force: float
    r_a: float
    r_b: float
    f_a: float
    h_mm: float
    q_mm: float
    flagged: bool


def critical_theta(mu: float) -> float:
    """Fold angle (deg) at which the equilibrium denominator vanishes."""
    return 2.0 * math.degrees(math.atan(mu))


def _denominator(mu: float, theta: float) -> float:
    return mu * cos_half_deg(theta) - sin_half_deg(theta)


def vertical_force(case: LoadCase, params: FoldParams, theta: float,
                   singularity_tol: float = SINGULARITY_TOL) -> EquilibriumResult:
    """Vertical counterbalance force (N) from lateral tension at theta (deg).

    Raises SingularityError when |mu cos(theta/2) - sin(theta/2)| is within
    ``singularity_tol`` of zero (theta near 2 atan(mu)); a negative solution
    is returned flagged, not raised.
    """
    _check_theta(theta)
    c = cos_half_deg(theta)
    s = sin_half_deg(theta)
    den = case.mu * c - s
    if abs(den) <= singularity_tol:
        crit = critical_theta(case.mu)
        raise SingularityError(
            f"equilibrium is singular near theta* = {crit:.6f} deg for "
            f"mu = {case.mu} (denominator {den:.3e})",
            critical_theta_deg=crit)
    mg = case.beam_mass * case.gravity
    n = ((mg / 2.0) * s - case.mu * mg * c - (case.lateral_force / 2.0) * c) / den
    r_a = mg + n
    f_a = case.mu * r_a
    r_b = f_a + case.lateral_force
    return EquilibriumResult(
        vertical_force=n, r_a=r_a, r_b=r_b, f_a=f_a,
        h_mm=params.p * c, q_mm=params.p * s, flagged=n < 0.0)


def lateral_force_for_target(case: LoadCase, theta: float, target_n: float,
                             singularity_tol: float = SINGULARITY_TOL) -> float:
    """Lateral force F_l (N) that makes the vertical force equal target_n.

    The ``lateral_force`` field of ``case`` is ignored.  Raises
    InfeasibleError when the required F_l is negative (the target is
    exceeded with a slack cable).
    """
    _check_theta(theta)
    if not target_n >= 0.0:
        raise DomainError(f"target force must be >= 0 N, got {target_n}",
                          param="target_n", value=target_n)
    c = cos_half_deg(theta)
    s = sin_half_deg(theta)
    den = case.mu * c - s
    if abs(den) <= singularity_tol:
        crit = critical_theta(case.mu)
        raise SingularityError(
            f"equilibrium is singular near theta* = {crit:.6f} deg for "
            f"mu = {case.mu} (denominator {den:.3e})",
            critical_theta_deg=crit)
    if c == 0.0:
        raise DomainError(
            "lateral force has no vertical effect at the flat state "
            "(theta = 180 deg)", param="theta", value=theta)
    mg = case.beam_mass * case.gravity
    fl = ((mg / 2.0) * s - case.mu * mg * c - target_n * den) * 2.0 / c
    if fl < 0.0:
        raise InfeasibleError(
            f"target force {target_n} N is achieved without cable tension at "
            f"theta = {theta} deg (required F_l = {fl:.6g} N)")
    return fl


def equilibrium_residuals(case: LoadCase, params: FoldParams, theta: float,
                          candidate_n: float) -> tuple[float, float, float]:
    """Force and moment balance residuals at a candidate vertical force.

    Reactions are recovered from the two force balances, so the x and y
    residuals vanish identically and the moment residual (N mm) carries the
    discrepancy; zero at the true solution.
    """
    _check_theta(theta)
    c = cos_half_deg(theta)
    s = sin_half_deg(theta)
    h = params.p * c
    q = params.p * s
    mg = case.beam_mass * case.gravity
    fl = case.lateral_force
    r_a = mg + candidate_n
    f_a = case.mu * r_a
    r_b = f_a + fl
    f_x = f_a + fl - r_b
    f_y = r_a - mg - candidate_n
    moment = fl * (h / 2.0) + mg * (q / 2.0) - r_b * h + candidate_n * q
    return f_x, f_y, moment
