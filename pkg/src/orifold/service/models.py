"""Pydantic request/response models for the HTTP service.

Every request may carry an inline ``config`` object using the same JSON
schema as configuration files; omitted sections fall back to the prototype
defaults.  The config payload is validated by the library parser, not by
pydantic, so files and requests share one schema and one set of errors.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict


class _Request(BaseModel):
    model_config = ConfigDict(extra="forbid")

    config: dict | None = None


class DimsRequest(_Request):
    theta: float


class ThetaFromHeightRequest(_Request):
    h: float


class SweepRequest(_Request):
    theta_min: float = 90.0
    theta_max: float = 180.0
    step: float = 1.0
    betas: list[float] = [45.0, 60.0, 70.0]


class ForceRequest(_Request):
    theta: float
    fl: float | None = None
    mu: float | None = None
    mass: float | None = None
    load: float | None = None


class LateralForTargetRequest(_Request):
    theta: float
    target_n: float
    mu: float | None = None
    mass: float | None = None


class ActuateRequest(_Request):
    servo: float
    mode: Literal["calibrated", "geometric"] = "calibrated"
    voltage: float = 5.0


class ServoForThetaRequest(_Request):
    theta: float
    mode: Literal["calibrated", "geometric"] = "calibrated"


class TestbedRequest(_Request):
    angles: list[float] = [0.0, 30.0, 60.0, 90.0, 120.0]


class HeightRequest(_Request):
    servo: float


class ScheduleRequest(_Request):
    levels: list[int]


class MeshRequest(_Request):
    theta: float


class CreaseRequest(_Request):
    pass


class ReportRequest(_Request):
    angles: list[float] = [0.0, 30.0, 60.0, 90.0, 120.0]


class DimsResponse(BaseModel):
    theta_deg: float
    phi_deg: float
    h_mm: float
    l_mm: float
    w_mm: float


class ThetaResponse(BaseModel):
    theta_deg: float


class ForceResponse(BaseModel):
    theta_deg: float
    vertical_force_n: float
    r_a_n: float
    r_b_n: float
    f_a_n: float
    h_mm: float
    q_mm: float
    flagged: bool


class LateralForceResponse(BaseModel):
    lateral_force_n: float


class ActuateResponse(BaseModel):
    servo_deg: float
    mode: str
    voltage: float
    theta_deg: float
    cable_mm: float
    time_s: float
    power_w: float


class ServoResponse(BaseModel):
    servo_deg: float


class HeightResponse(BaseModel):
    height_mm: float


class CommandModel(BaseModel):
    servo_deg: float
    voltage: float


class ScheduleResponse(BaseModel):
    commands: list[CommandModel]


class ContactMapModel(BaseModel):
    servo_deg: float
    theta_deg: float
    height_mm: float
    area_factor: float
    forces: dict[int, float]
    flagged: bool
    note: str


class TestbedResponse(BaseModel):
    maps: list[ContactMapModel]


class ErrorBody(BaseModel):
    type: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
