"""System configuration: strict JSON parsing and canonical serialization.

The document has four optional sections (``fold``, ``actuator``,
``testbed``, ``load_case``) plus ``schema_version``; omitted fields take
the desk-scale prototype defaults.  Unknown keys are rejected.  Angles are
degrees, lengths millimeters, masses kilograms.  The testbed section has no
``prototype`` entry: the fold section is the single source of truth and is
shared with the testbed at parse time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

from .actuation import ActuatorConfig
from .errors import ConfigError, DomainError
from .forces import LoadCase
from .geometry import FoldParams, PROTOTYPE
from .testbed import ContactLocation, TestbedConfig

SCHEMA_VERSION = 1

_TOP_KEYS = {"schema_version", "fold", "actuator", "testbed", "load_case"}
_TESTBED_KEYS = {f.name for f in fields(TestbedConfig)} - {"prototype"}


@dataclass(frozen=True)
class SystemConfig:
    fold: FoldParams
    actuator: ActuatorConfig
    testbed: TestbedConfig
    load_case: LoadCase

    def __post_init__(self):
        if self.testbed.prototype != self.fold:
            raise DomainError(
                "testbed.prototype must equal the fold parameters",
                param="testbed.prototype")


def default_config() -> SystemConfig:
    """The desk-scale prototype configuration."""
    return SystemConfig(fold=PROTOTYPE, actuator=ActuatorConfig(),
                        testbed=TestbedConfig(prototype=PROTOTYPE),
                        load_case=LoadCase())


def _expect_object(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(f"{where} must be a JSON object, got {type(value).__name__}",
                          field=where)
    return value


def _check_keys(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        name = sorted(unknown)[0]
        path = f"{where}.{name}" if where else name
        raise ConfigError(f"unknown configuration key {path!r}", field=path)


def _number(obj: dict, key: str, default: float, where: str) -> float:
    value = obj.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key} must be a number, got {value!r}",
                          field=f"{where}.{key}")
    return float(value)


def _integer(obj: dict, key: str, default: int, where: str) -> int:
    value = obj.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}.{key} must be an integer, got {value!r}",
                          field=f"{where}.{key}")
    return value


def _pair(value, where: str) -> tuple[float, float]:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in value)):
        raise ConfigError(f"{where} must be a pair of numbers, got {value!r}",
                          field=where)
    return float(value[0]), float(value[1])


def _build(cls, kwargs: dict, where: str):
    try:
        return cls(**kwargs)
    except DomainError as err:
        path = f"{where}.{err.param}" if err.param else where
        raise ConfigError(f"{path}: {err}", field=path) from err


def _parse_fold(obj: dict) -> FoldParams:
    _check_keys(obj, {"p", "beta", "n", "m", "theta_neutral"}, "fold")
    return _build(FoldParams, dict(
        p=_number(obj, "p", PROTOTYPE.p, "fold"),
        beta=_number(obj, "beta", PROTOTYPE.beta, "fold"),
        n=_integer(obj, "n", PROTOTYPE.n, "fold"),
        m=_integer(obj, "m", PROTOTYPE.m, "fold"),
        theta_neutral=_number(obj, "theta_neutral", PROTOTYPE.theta_neutral, "fold"),
    ), "fold")


def _parse_actuator(obj: dict) -> ActuatorConfig:
    defaults = ActuatorConfig()
    allowed = {f.name for f in fields(ActuatorConfig)}
    _check_keys(obj, allowed, "actuator")
    kwargs = {}
    for name in ("wheel_diameter", "reference_voltage", "boost_voltage",
                 "sweep_time_s", "fast_sweep_time_s", "servo_current_a",
                 "boost_current_a", "controller_power_w"):
        kwargs[name] = _number(obj, name, getattr(defaults, name), "actuator")
    kwargs["n_active"] = _integer(obj, "n_active", defaults.n_active, "actuator")
    if "servo_range" in obj:
        kwargs["servo_range"] = _pair(obj["servo_range"], "actuator.servo_range")
    if "calibration" in obj:
        raw = obj["calibration"]
        if not isinstance(raw, list):
            raise ConfigError("actuator.calibration must be a list of [servo, theta] pairs",
                              field="actuator.calibration")
        kwargs["calibration"] = tuple(
            _pair(entry, f"actuator.calibration[{i}]") for i, entry in enumerate(raw))
    return _build(ActuatorConfig, kwargs, "actuator")


def _parse_locations(raw, where: str) -> tuple[ContactLocation, ...]:
    if not isinstance(raw, list):
        raise ConfigError(f"{where} must be a list of location objects", field=where)
    locations = []
    for i, entry in enumerate(raw):
        spot = _expect_object(entry, f"{where}[{i}]")
        _check_keys(spot, {"id", "unit", "cable_connected"}, f"{where}[{i}]")
        for key in ("id", "unit", "cable_connected"):
            if key not in spot:
                raise ConfigError(f"{where}[{i}] is missing {key!r}",
                                  field=f"{where}[{i}].{key}")
        if not isinstance(spot["cable_connected"], bool):
            raise ConfigError(f"{where}[{i}].cable_connected must be a boolean",
                              field=f"{where}[{i}].cable_connected")
        locations.append(ContactLocation(
            location_id=_integer(spot, "id", 0, f"{where}[{i}]"),
            unit_index=_integer(spot, "unit", 0, f"{where}[{i}]"),
            cable_connected=spot["cable_connected"]))
    return tuple(locations)


def _parse_testbed(obj: dict, fold: FoldParams) -> TestbedConfig:
    defaults = TestbedConfig()
    _check_keys(obj, _TESTBED_KEYS, "testbed")
    kwargs = {"prototype": fold}
    for name in ("plate_mass_kg", "thickness_offset_mm", "mu", "beam_mass_kg",
                 "cable_tension_coeff", "gravity"):
        kwargs[name] = _number(obj, name, getattr(defaults, name), "testbed")
    if "contact_locations" in obj:
        kwargs["contact_locations"] = _parse_locations(
            obj["contact_locations"], "testbed.contact_locations")
    return _build(TestbedConfig, kwargs, "testbed")


def _parse_load_case(obj: dict) -> LoadCase:
    defaults = LoadCase()
    allowed = {f.name for f in fields(LoadCase)}
    _check_keys(obj, allowed, "load_case")
    kwargs = {name: _number(obj, name, getattr(defaults, name), "load_case")
              for name in allowed}
    return _build(LoadCase, kwargs, "load_case")


def parse_config(data: dict) -> SystemConfig:
    """Validate a decoded configuration object into a SystemConfig."""
    data = _expect_object(data, "configuration")
    _check_keys(data, _TOP_KEYS, "")
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ConfigError(f"unsupported schema_version {version!r}; this build "
                          f"reads version {SCHEMA_VERSION}", field="schema_version")
    fold = _parse_fold(_expect_object(data.get("fold", {}), "fold"))
    actuator = _parse_actuator(_expect_object(data.get("actuator", {}), "actuator"))
    testbed = _parse_testbed(_expect_object(data.get("testbed", {}), "testbed"), fold)
    load_case = _parse_load_case(_expect_object(data.get("load_case", {}), "load_case"))
    return SystemConfig(fold=fold, actuator=actuator, testbed=testbed,
                        load_case=load_case)


def load_config(text: str) -> SystemConfig:
    """Parse a JSON configuration document; '{}' yields the full defaults."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError(
            f"invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}",
            line=err.lineno, column=err.colno) from err
    return parse_config(data)


def config_to_dict(cfg: SystemConfig) -> dict:
    """Plain-JSON representation with every field explicit."""
    return {
        "schema_version": SCHEMA_VERSION,
        "fold": {
            "p": cfg.fold.p,
            "beta": cfg.fold.beta,
            "n": cfg.fold.n,
            "m": cfg.fold.m,
            "theta_neutral": cfg.fold.theta_neutral,
        },
        "actuator": {
            "wheel_diameter": cfg.actuator.wheel_diameter,
            "servo_range": list(cfg.actuator.servo_range),
            "reference_voltage": cfg.actuator.reference_voltage,
            "boost_voltage": cfg.actuator.boost_voltage,
            "sweep_time_s": cfg.actuator.sweep_time_s,
            "fast_sweep_time_s": cfg.actuator.fast_sweep_time_s,
            "servo_current_a": cfg.actuator.servo_current_a,
            "boost_current_a": cfg.actuator.boost_current_a,
            "controller_power_w": cfg.actuator.controller_power_w,
            "calibration": [list(pair) for pair in cfg.actuator.calibration],
            "n_active": cfg.actuator.n_active,
        },
        "testbed": {
            "plate_mass_kg": cfg.testbed.plate_mass_kg,
            "thickness_offset_mm": cfg.testbed.thickness_offset_mm,
            "mu": cfg.testbed.mu,
            "beam_mass_kg": cfg.testbed.beam_mass_kg,
            "cable_tension_coeff": cfg.testbed.cable_tension_coeff,
            "gravity": cfg.testbed.gravity,
            "contact_locations": [
                {"id": loc.location_id, "unit": loc.unit_index,
                 "cable_connected": loc.cable_connected}
                for loc in cfg.testbed.contact_locations],
        },
        "load_case": {
            "load_n": cfg.load_case.load_n,
            "beam_mass": cfg.load_case.beam_mass,
            "mu": cfg.load_case.mu,
            "lateral_force": cfg.load_case.lateral_force,
            "gravity": cfg.load_case.gravity,
        },
    }


def serialize_config(cfg: SystemConfig) -> str:
    """Canonical JSON text; parse(serialize(cfg)) == cfg."""
    return json.dumps(config_to_dict(cfg), indent=2) + "\n"
