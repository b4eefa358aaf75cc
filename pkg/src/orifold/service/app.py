"""HTTP service wrapping the simulation library.

JSON endpoints expose the individual operations; ``/v1/export/*`` endpoints
return the finished text documents (CSV, OBJ, SVG, report) exactly as the
CLI writes them.  Domain failures map to HTTP 400 with a typed error body.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import actuation, export, forces, geometry, mesh, pattern, testbed
from ..config import SystemConfig, config_to_dict, parse_config, default_config
from ..errors import OrifoldError
from . import models

SERVICE_VERSION = "1"


def _resolve_config(payload: dict | None) -> SystemConfig:
    if payload is None:
        return default_config()
    return parse_config(payload)


def _force_case(cfg: SystemConfig, *, fl=None, mu=None, mass=None, load=None) -> forces.LoadCase:
    base = cfg.load_case
    return forces.LoadCase(
        load_n=base.load_n if load is None else load,
        beam_mass=base.beam_mass if mass is None else mass,
        mu=base.mu if mu is None else mu,
        lateral_force=base.lateral_force if fl is None else fl,
        gravity=base.gravity)


def _actuate(cfg: SystemConfig, req: models.ActuateRequest) -> models.ActuateResponse:
    theta = actuation.theta_from_servo(cfg.actuator, cfg.fold, req.servo, req.mode)
    return models.ActuateResponse(
        servo_deg=req.servo, mode=req.mode, voltage=req.voltage, theta_deg=theta,
        cable_mm=actuation.cable_displacement(cfg.actuator, req.servo),
        time_s=actuation.actuation_time(cfg.actuator, req.servo, req.voltage),
        power_w=actuation.power_draw(cfg.actuator, req.voltage))


def _report_text(cfg: SystemConfig, angles: list[float]) -> str:
    act = cfg.actuator
    maps = testbed.simulate_testbed(cfg.testbed, act, angles)
    lo, hi = act.servo_range
    full = min(160.0, hi)  # measured height-change figure uses servo 160
    heights = {s: testbed.height_report(cfg.testbed, act, s)
               for s in (max(0.0, lo), full)}
    data = export.ReportData(
        config=cfg,
        neutral_dims=geometry.dimensions(cfg.fold, cfg.fold.theta_neutral),
        power_w={v: actuation.power_draw(act, v) for v in act.voltages},
        latency_s={v: actuation.actuation_time(act, 180.0, v) for v in act.voltages},
        height_mm=heights,
        testbed=tuple(maps))
    return export.write_report(data)


def create_app() -> FastAPI:
    app = FastAPI(title="orifold", version=SERVICE_VERSION)

    @app.exception_handler(OrifoldError)
    async def _domain_error(request: Request, exc: OrifoldError):
        body = models.ErrorResponse(
            error=models.ErrorBody(type=exc.kind, message=str(exc)))
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/v1/config/default")
    def config_default():
        return config_to_dict(default_config())

    @app.post("/v1/config/validate")
    def config_validate(payload: dict):
        return config_to_dict(parse_config(payload))

    @app.post("/v1/dims", response_model=models.DimsResponse)
    def dims(req: models.DimsRequest):
        cfg = _resolve_config(req.config)
        d = geometry.dimensions(cfg.fold, req.theta)
        return models.DimsResponse(theta_deg=req.theta, phi_deg=d.phi,
                                   h_mm=d.h, l_mm=d.l, w_mm=d.w)

    @app.post("/v1/theta-from-height", response_model=models.ThetaResponse)
    def theta_from_height(req: models.ThetaFromHeightRequest):
        cfg = _resolve_config(req.config)
        return models.ThetaResponse(
            theta_deg=geometry.theta_from_height(cfg.fold, req.h))

    @app.post("/v1/force", response_model=models.ForceResponse)
    def force(req: models.ForceRequest):
        cfg = _resolve_config(req.config)
        case = _force_case(cfg, fl=req.fl, mu=req.mu, mass=req.mass, load=req.load)
        res = forces.vertical_force(case, cfg.fold, req.theta)
        return models.ForceResponse(
            theta_deg=req.theta, vertical_force_n=res.vertical_force,
            r_a_n=res.r_a, r_b_n=res.r_b, f_a_n=res.f_a,
            h_mm=res.h_mm, q_mm=res.q_mm, flagged=res.flagged)

    @app.post("/v1/force/lateral-for-target",
              response_model=models.LateralForceResponse)
    def lateral_for_target(req: models.LateralForTargetRequest):
        cfg = _resolve_config(req.config)
        case = _force_case(cfg, mu=req.mu, mass=req.mass)
        return models.LateralForceResponse(
            lateral_force_n=forces.lateral_force_for_target(
                case, req.theta, req.target_n))

    @app.post("/v1/actuate", response_model=models.ActuateResponse)
    def actuate(req: models.ActuateRequest):
        return _actuate(_resolve_config(req.config), req)

    @app.post("/v1/actuate/servo-for-theta", response_model=models.ServoResponse)
    def servo_for_theta(req: models.ServoForThetaRequest):
        cfg = _resolve_config(req.config)
        return models.ServoResponse(servo_deg=actuation.servo_for_theta(
            cfg.actuator, cfg.fold, req.theta, req.mode))

    @app.post("/v1/testbed", response_model=models.TestbedResponse)
    def testbed_json(req: models.TestbedRequest):
        cfg = _resolve_config(req.config)
        maps = testbed.simulate_testbed(cfg.testbed, cfg.actuator, req.angles)
        return models.TestbedResponse(maps=[
            models.ContactMapModel(
                servo_deg=cm.servo_deg, theta_deg=cm.theta_deg,
                height_mm=cm.height_mm, area_factor=cm.area_factor,
                forces=cm.forces, flagged=cm.flagged, note=cm.note)
            for cm in maps])

    @app.post("/v1/testbed/height", response_model=models.HeightResponse)
    def testbed_height(req: models.HeightRequest):
        cfg = _resolve_config(req.config)
        return models.HeightResponse(
            height_mm=testbed.height_report(cfg.testbed, cfg.actuator, req.servo))

    @app.post("/v1/schedule", response_model=models.ScheduleResponse)
    def schedule(req: models.ScheduleRequest):
        _resolve_config(req.config)
        return models.ScheduleResponse(commands=[
            models.CommandModel(servo_deg=c.servo_deg, voltage=c.voltage)
            for c in testbed.intensity_schedule(req.levels)])

    @app.post("/v1/export/sweep", response_class=PlainTextResponse)
    def export_sweep(req: models.SweepRequest) -> str:
        cfg = _resolve_config(req.config)
        table = geometry.sweep(cfg.fold, req.theta_min, req.theta_max,
                               req.step, req.betas)
        return export.write_sweep_csv(table)

    @app.post("/v1/export/testbed", response_class=PlainTextResponse)
    def export_testbed(req: models.TestbedRequest) -> str:
        cfg = _resolve_config(req.config)
        maps = testbed.simulate_testbed(cfg.testbed, cfg.actuator, req.angles)
        return export.write_testbed_csv(maps, cfg.testbed.contact_locations)

    @app.post("/v1/export/mesh", response_class=PlainTextResponse)
    def export_mesh(req: models.MeshRequest) -> str:
        cfg = _resolve_config(req.config)
        return export.write_mesh_obj(mesh.folded_mesh(cfg.fold, req.theta))

    @app.post("/v1/export/crease", response_class=PlainTextResponse)
    def export_crease(req: models.CreaseRequest) -> str:
        cfg = _resolve_config(req.config)
        return export.write_crease_svg(pattern.crease_pattern(cfg.fold))

    @app.post("/v1/export/report", response_class=PlainTextResponse)
    def export_report(req: models.ReportRequest) -> str:
        cfg = _resolve_config(req.config)
        return _report_text(cfg, req.angles)

    return app


app = create_app()
