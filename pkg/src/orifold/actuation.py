"""Servo -> extension wheel -> cable -> fold angle actuation chain.

Two servo-to-fold mappings are provided.  The calibrated mode interpolates
a measured (servo, theta) table and is the default for reproducing the
desk-scale prototype figures; the geometric mode solves the ideal per-unit
cable-contraction equation and suits design exploration.  Timing scales the
measured full-sweep time linearly; power is supply voltage times configured
servo current plus the controller draw.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import ClampWarning, ConfigError, DomainError, InfeasibleError
from .geometry import FoldParams, _check_theta, sin_half_deg

#: Measured prototype calibration: servo angle (deg) -> fold angle (deg).
DEFAULT_CALIBRATION = ((0.0, 130.0), (60.0, 100.0), (120.0, 58.0))

#: Floor applied when calibrated extrapolation would leave (0, 180].
THETA_FLOOR_DEG = 1e-9


@dataclass(frozen=True)
class ActuatorConfig:
    """Servo, extension wheel and supply-voltage table.

    ``sweep_time_s``/``servo_current_a`` apply at ``reference_voltage``,
    ``fast_sweep_time_s``/``boost_current_a`` at ``boost_voltage``.  The
    boost current is configuration (chosen to reproduce the measured boost
    power), not derived.  ``n_active`` is the unit count spanned by one
    cable path in the geometric mapping.
    """

    wheel_diameter: float = 40.0
    servo_range: tuple[float, float] = (0.0, 180.0)
    reference_voltage: float = 5.0
    boost_voltage: float = 8.4
    sweep_time_s: float = 0.48
    fast_sweep_time_s: float = 0.39
    servo_current_a: float = 1.9
    boost_current_a: float = 2.8
    controller_power_w: float = 0.125
    calibration: tuple[tuple[float, float], ...] = DEFAULT_CALIBRATION
    n_active: int = 1

    def __post_init__(self):
        if not self.wheel_diameter > 0:
            raise DomainError(
                f"wheel_diameter must be > 0 mm, got {self.wheel_diameter}",
                param="wheel_diameter", value=self.wheel_diameter)
        lo, hi = self.servo_range
        if not lo < hi:
            raise DomainError(f"servo_range must satisfy min < max, got {self.servo_range}",
                              param="servo_range", value=self.servo_range)
        for name in ("sweep_time_s", "fast_sweep_time_s"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be > 0 s", param=name,
                                  value=getattr(self, name))
        for name in ("servo_current_a", "boost_current_a", "controller_power_w"):
            if not getattr(self, name) >= 0:
                raise DomainError(f"{name} must be >= 0", param=name,
                                  value=getattr(self, name))
        if not self.calibration:
            raise DomainError("calibration table must be nonempty",
                              param="calibration", value=self.calibration)
        if self.calibration[0][0] != 0.0:
            raise DomainError(
                f"first calibration servo angle must be 0, got {self.calibration[0][0]}",
                param="calibration", value=self.calibration)
        servos = [s for s, _ in self.calibration]
        thetas = [t for _, t in self.calibration]
        if any(b <= a for a, b in zip(servos, servos[1:])):
            raise DomainError("calibration servo angles must be strictly increasing",
                              param="calibration", value=self.calibration)
        if any(b >= a for a, b in zip(thetas, thetas[1:])):
            raise DomainError("calibration fold angles must be strictly decreasing",
                              param="calibration", value=self.calibration)
        for t in thetas:
            if not 0.0 < t <= 180.0:
                raise DomainError(
                    f"calibration fold angles must be in (0, 180], got {t}",
                    param="calibration", value=t)
        if not (isinstance(self.n_active, int) and self.n_active >= 1):
            raise DomainError(f"n_active must be an integer >= 1, got {self.n_active}",
                              param="n_active", value=self.n_active)

    @property
    def voltages(self) -> tuple[float, float]:
        return (self.reference_voltage, self.boost_voltage)


@dataclass(frozen=True)
class ActuationCommand:
    """One servo target (deg) at a supply voltage (V)."""

    servo_deg: float
    voltage: float = 5.0


def _check_servo(config: ActuatorConfig, servo_deg: float) -> None:
    lo, hi = config.servo_range
    if not lo <= servo_deg <= hi:
        raise DomainError(
            f"servo angle {servo_deg} deg outside range [{lo}, {hi}]",
            param="servo_deg", value=servo_deg)


def cable_displacement(config: ActuatorConfig, servo_deg: float) -> float:
    """Cable length (mm) reeled onto the extension wheel at a servo angle."""
    _check_servo(config, servo_deg)
    return (config.wheel_diameter / 2.0) * math.radians(servo_deg)


def _max_contraction(config: ActuatorConfig, params: FoldParams) -> float:
    return config.n_active * 2.0 * params.p * sin_half_deg(params.theta_neutral)


def _contraction(config: ActuatorConfig, params: FoldParams, theta: float) -> float:
    return config.n_active * 2.0 * params.p * (
        sin_half_deg(params.theta_neutral) - sin_half_deg(theta))


def _calibrated_theta(config: ActuatorConfig, servo_deg: float) -> float:
    knots = config.calibration
    theta = None
    for (x0, y0), (x1, y1) in zip(knots, knots[1:]):
        if servo_deg <= x1:
            t = (servo_deg - x0) / (x1 - x0)
            theta = y0 * (1.0 - t) + y1 * t
            break
    if theta is None:
        if len(knots) == 1:
            return knots[0][1]
        (x0, y0), (x1, y1) = knots[-2], knots[-1]
        theta = y1 + (y1 - y0) / (x1 - x0) * (servo_deg - x1)
    if theta <= 0.0 or theta > 180.0:
        clamped = min(max(theta, THETA_FLOOR_DEG), 180.0)
        warnings.warn(
            f"calibrated extrapolation gave theta = {theta:.6g} deg at servo "
            f"{servo_deg} deg; clamped to {clamped:.6g}", ClampWarning)
        return clamped
    return theta


def _geometric_theta(config: ActuatorConfig, params: FoldParams,
                     servo_deg: float) -> float:
    disp = cable_displacement(config, servo_deg)
    max_c = _max_contraction(config, params)
    if disp > max_c:
        raise InfeasibleError(
            f"cable displacement {disp:.3f} mm exceeds the maximum contraction "
            f"{max_c:.3f} mm of {config.n_active} unit(s)",
            reachable=(0.0, params.theta_neutral))
    # contraction is strictly decreasing in theta, so the root is bracketed
    lo, hi = 0.0, params.theta_neutral
    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        if _contraction(config, params, mid) - disp > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def theta_from_servo(config: ActuatorConfig, params: FoldParams, servo_deg: float,
                     mode: str = "calibrated") -> float:
    """Fold angle (deg) reached at a servo angle, by table or by geometry.

    Calibrated mode is piecewise linear through the calibration knots with
    linear extrapolation past the last knot (clamped to (0, 180] with a
    ClampWarning).  Geometric mode solves
    n_active * 2p * (sin(theta_neutral/2) - sin(theta/2)) = cable displacement
    by bisection on (0, theta_neutral].
    """
    _check_servo(config, servo_deg)
    if mode == "calibrated":
        return _calibrated_theta(config, servo_deg)
    if mode == "geometric":
        return _geometric_theta(config, params, servo_deg)
    raise DomainError(f"unknown mode {mode!r}; expected 'calibrated' or 'geometric'",
                      param="mode", value=mode)


def servo_for_theta(config: ActuatorConfig, params: FoldParams, theta: float,
                    mode: str = "calibrated") -> float:
    """Servo angle (deg) that reaches a fold angle; inverse of theta_from_servo."""
    _check_theta(theta)
    lo, hi = config.servo_range
    if mode == "calibrated":
        knots = config.calibration
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ClampWarning)
            reachable_lo = _calibrated_theta(config, hi)
        reachable_hi = knots[0][1]
        if theta > reachable_hi or theta < reachable_lo:
            raise InfeasibleError(
                f"theta = {theta} deg is outside the calibrated reachable "
                f"interval [{reachable_lo:.6g}, {reachable_hi:.6g}] deg",
                reachable=(reachable_lo, reachable_hi))
        if len(knots) == 1:
            return knots[0][0]
        for (x0, y0), (x1, y1) in zip(knots, knots[1:]):
            if theta >= y1:
                t = (y0 - theta) / (y0 - y1)
                return x0 * (1.0 - t) + x1 * t
        (x0, y0), (x1, y1) = knots[-2], knots[-1]
        return x1 + (theta - y1) * (x1 - x0) / (y1 - y0)
    if mode == "geometric":
        if theta > params.theta_neutral:
            raise InfeasibleError(
                f"theta = {theta} deg is above the neutral angle "
                f"{params.theta_neutral} deg; the cable cannot push",
                reachable=(0.0, params.theta_neutral))
        disp = _contraction(config, params, theta)
        servo = math.degrees(disp / (config.wheel_diameter / 2.0))
        if servo > hi:
            theta_lo = _geometric_theta(config, params, hi) if \
                cable_displacement(config, hi) <= _max_contraction(config, params) else 0.0
            raise InfeasibleError(
                f"theta = {theta} deg needs servo {servo:.3f} deg, beyond the "
                f"range maximum {hi} deg",
                reachable=(theta_lo, params.theta_neutral))
        return servo
    raise DomainError(f"unknown mode {mode!r}; expected 'calibrated' or 'geometric'",
                      param="mode", value=mode)


def _voltage_entry(config: ActuatorConfig, voltage: float) -> tuple[float, float]:
    """(sweep_time_s, servo_current_a) for a supply voltage in the table."""
    if voltage == config.reference_voltage:
        return config.sweep_time_s, config.servo_current_a
    if voltage == config.boost_voltage:
        return config.fast_sweep_time_s, config.boost_current_a
    raise ConfigError(
        f"voltage {voltage} V is not in the configured table {config.voltages}",
        field="voltage")


def actuation_time(config: ActuatorConfig, delta_servo_deg: float,
                   voltage: float = 5.0) -> float:
    """Seconds to sweep delta_servo_deg, scaling the full-180 sweep linearly."""
    if not delta_servo_deg >= 0.0:
        raise DomainError(f"servo sweep must be >= 0 deg, got {delta_servo_deg}",
                          param="delta_servo_deg", value=delta_servo_deg)
    sweep_time, _ = _voltage_entry(config, voltage)
    return delta_servo_deg / 180.0 * sweep_time


def power_draw(config: ActuatorConfig, voltage: float = 5.0) -> float:
    """System power (W): servo at the given supply voltage plus controller."""
    _, current = _voltage_entry(config, voltage)
    return voltage * current + config.controller_power_w
