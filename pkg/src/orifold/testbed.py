"""Loaded-plate testbed simulation: contact forces over sensing locations.

A plate of configured mass rests on the folded structure; eight sensing
locations report contact force at a sequence of servo angles.  At each
angle the fold angle comes from the calibrated servo map, the cable tension
grows quadratically with the reeled cable length (progressive take-up of
slack, then stiffening of the compliant hinges), and the per-unit vertical
force follows the static equilibrium model.  The total supported force
(plate weight plus actuation-induced force) is shared evenly across the
locations and scaled by a contact-area factor a(theta) = sin(theta/2),
which is 1 at the flat state and shrinks as the ridge lines sharpen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .actuation import ActuationCommand, ActuatorConfig, cable_displacement, theta_from_servo
from .errors import DomainError, SingularityError
from .forces import DEFAULT_GRAVITY, LoadCase, vertical_force
from .geometry import PROTOTYPE, FoldParams, dimensions, sin_half_deg

#: Additive material thickness so the neutral reported height matches the
#: measured 10 mm of the desk-scale prototype (kinematic height 9.2976 mm).
DEFAULT_THICKNESS_OFFSET_MM = 10.0 - 22.0 * math.cos(math.radians(65.0))

#: Cable tension model: T = coeff * displacement^2 (N, displacement in mm).
DEFAULT_CABLE_TENSION_COEFF = 1e-3

#: Intensity level -> servo angle (deg).
INTENSITY_LEVELS = {1: 40.0, 2: 80.0, 3: 120.0, 4: 160.0}


@dataclass(frozen=True)
class ContactLocation:
    """One sensing spot on the plate, tagged with the unit underneath and
    whether that unit's facet carries an embedded cable."""

    location_id: int
    unit_index: int
    cable_connected: bool


def _default_locations() -> tuple[ContactLocation, ...]:
    # eight spots: 1-4 over cable-connected facets, 5-8 not
    return tuple(ContactLocation(i, i - 1, i <= 4) for i in range(1, 9))


DEFAULT_CONTACT_LOCATIONS = _default_locations()


@dataclass(frozen=True)
class TestbedConfig:
    __test__ = False  # not a pytest class, despite the name

    prototype: FoldParams = PROTOTYPE
    plate_mass_kg: float = 1.0
    thickness_offset_mm: float = DEFAULT_THICKNESS_OFFSET_MM
    mu: float = 0.0
    beam_mass_kg: float = 0.0
    cable_tension_coeff: float = DEFAULT_CABLE_TENSION_COEFF
    gravity: float = DEFAULT_GRAVITY
    contact_locations: tuple[ContactLocation, ...] = field(
        default=DEFAULT_CONTACT_LOCATIONS)

    def __post_init__(self):
        for name in ("plate_mass_kg", "thickness_offset_mm", "mu",
                     "beam_mass_kg", "cable_tension_coeff"):
            if not getattr(self, name) >= 0.0:
                raise DomainError(f"{name} must be >= 0", param=name,
                                  value=getattr(self, name))
        if not self.gravity > 0.0:
            raise DomainError("gravity must be > 0 m/s^2", param="gravity",
                              value=self.gravity)
        if not self.contact_locations:
            raise DomainError("at least one contact location is required",
                              param="contact_locations", value=())
        ids = [loc.location_id for loc in self.contact_locations]
        if len(set(ids)) != len(ids):
            raise DomainError("contact location ids must be unique",
                              param="contact_locations", value=ids)


@dataclass(frozen=True)
class ContactMap:
    """Per-location contact forces (N) at one servo angle.

    ``area_factor`` is the common contact-area factor a(theta); ``flagged``
    marks entries where the equilibrium model was singular and no forces
    could be produced."""

    servo_deg: float
    theta_deg: float
    height_mm: float
    area_factor: float
    forces: dict[int, float]
    flagged: bool = False
    note: str = ""


def height_report(config: TestbedConfig, actuator: ActuatorConfig,
                  servo_deg: float) -> float:
    """Reported structure height (mm): kinematic height plus material offset."""
    theta = theta_from_servo(actuator, config.prototype, servo_deg, "calibrated")
    return dimensions(config.prototype, theta).h + config.thickness_offset_mm


def _actuation_force_per_unit(config: TestbedConfig, actuator: ActuatorConfig,
                              servo_deg: float, theta: float) -> float:
    disp = cable_displacement(actuator, servo_deg)
    tension = config.cable_tension_coeff * disp * disp
    case = LoadCase(load_n=0.0, beam_mass=config.beam_mass_kg, mu=config.mu,
                    lateral_force=tension, gravity=config.gravity)
    result = vertical_force(case, config.prototype, theta)
    # a slack cable cannot push the structure down; negative solutions
    # contribute nothing
    return max(result.vertical_force, 0.0)


def simulate_testbed(config: TestbedConfig, actuator: ActuatorConfig,
                     servo_angles: list[float]) -> list[ContactMap]:
    """Contact maps for a sequence of servo angles (deg).

    Entries where the equilibrium model is singular are flagged and carry
    no forces; the remaining angles are still produced.
    """
    if not servo_angles:
        raise DomainError("servo_angles must be nonempty",
                          param="servo_angles", value=servo_angles)
    locations = config.contact_locations
    weight = config.plate_mass_kg * config.gravity
    maps = []
    for servo in servo_angles:
        theta = theta_from_servo(actuator, config.prototype, servo, "calibrated")
        area = sin_half_deg(theta)
        height = dimensions(config.prototype, theta).h + config.thickness_offset_mm
        try:
            unit_force = _actuation_force_per_unit(config, actuator, servo, theta)
        except SingularityError as err:
            maps.append(ContactMap(
                servo_deg=servo, theta_deg=theta, height_mm=height,
                area_factor=area, forces={}, flagged=True, note=str(err)))
            continue
        total = weight + config.prototype.units * unit_force
        share = total / len(locations)
        forces = {loc.location_id: area * share for loc in locations}
        maps.append(ContactMap(
            servo_deg=servo, theta_deg=theta, height_mm=height,
            area_factor=area, forces=forces))
    return maps


def intensity_schedule(levels: list[int]) -> list[ActuationCommand]:
    """Servo commands for a sequence of intensity levels 1-4 (40 deg per level)."""
    if not levels:
        raise DomainError("levels must be nonempty", param="levels", value=levels)
    commands = []
    for level in levels:
        if level not in INTENSITY_LEVELS:
            raise DomainError(
                f"unknown intensity level {level!r}; expected one of "
                f"{sorted(INTENSITY_LEVELS)}", param="levels", value=level)
        commands.append(ActuationCommand(servo_deg=INTENSITY_LEVELS[level]))
    return commands
