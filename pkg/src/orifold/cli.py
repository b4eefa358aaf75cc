"""Command-line client for the simulation service.

Every subcommand issues one HTTP request: against ``--server`` (or
``ORIFOLD_SERVER``) when given, otherwise against the service app run
in-process, so no numerical logic lives here.  Data goes to stdout or
``-o``; diagnostics go to stderr as a single ``error: <kind>: <message>``
line.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import asyncio
import json
import sys

import click
import httpx

from .export import sig6


def _load_config_arg(path: str | None) -> dict | None:
    if path is None:
        return None
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as err:
        click.echo(f"error: config: cannot read {path}: {err}", err=True)
        raise SystemExit(1)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        click.echo(f"error: config: invalid JSON at line {err.lineno}, "
                   f"column {err.colno}: {err.msg}", err=True)
        raise SystemExit(1)
    if not isinstance(data, dict):
        click.echo("error: config: top level must be a JSON object", err=True)
        raise SystemExit(1)
    return data


async def _request(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        async with httpx.AsyncClient(base_url=server, timeout=60.0) as client:
            return await client.post(path, json=payload)
    from .service.app import create_app
    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(transport=transport,
                                 base_url="http://orifold.internal") as client:
        return await client.post(path, json=payload)


def _post(ctx: click.Context, path: str, payload: dict) -> httpx.Response:
    payload = {k: v for k, v in payload.items() if v is not None}
    if ctx.obj["config"] is not None:
        payload["config"] = ctx.obj["config"]
    try:
        resp = asyncio.run(_request(ctx.obj["server"], path, payload))
    except httpx.HTTPError as err:
        click.echo(f"error: transport: {err}", err=True)
        raise SystemExit(1)
    if resp.status_code == 200:
        return resp
    try:
        detail = resp.json()["error"]
        message = f"error: {detail['type']}: {detail['message']}"
    except Exception:
        message = f"error: http: status {resp.status_code}: {resp.text[:200]}"
    click.echo(message, err=True)
    raise SystemExit(1)


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv_row(names: list[str], values: list) -> str:
    cells = [v if isinstance(v, str) else sig6(v) for v in values]
    return ",".join(names) + "\n" + ",".join(cells) + "\n"


_output_option = click.option("-o", "--output", default=None,
                              help="output file (default: stdout)")


@click.group()
@click.option("--config", "config_path", envvar="ORIFOLD_CONFIG", default=None,
              metavar="PATH", help="JSON configuration file "
              "(default: prototype values; env ORIFOLD_CONFIG)")
@click.option("--server", envvar="ORIFOLD_SERVER", default=None, metavar="URL",
              help="base URL of a running service (default: in-process)")
@click.pass_context
def main(ctx, config_path, server):
    """Simulate fold kinematics, forces and actuation; export geometry."""
    ctx.ensure_object(dict)
    ctx.obj["config"] = _load_config_arg(config_path)
    ctx.obj["server"] = server


@main.command()
@click.option("--theta", type=float, required=True, help="fold angle (deg)")
@_output_option
@click.pass_context
def dims(ctx, theta, output):
    """Structure dimensions at one fold angle."""
    data = _post(ctx, "/v1/dims", {"theta": theta}).json()
    _emit(_csv_row(["theta_deg", "phi_deg", "h_mm", "l_mm", "w_mm"],
                   [data["theta_deg"], data["phi_deg"], data["h_mm"],
                    data["l_mm"], data["w_mm"]]), output)


@main.command()
@click.option("--theta-min", type=float, default=90.0, show_default=True)
@click.option("--theta-max", type=float, default=180.0, show_default=True)
@click.option("--step", type=float, default=1.0, show_default=True)
@click.option("--betas", default="45,60,70", show_default=True,
              help="comma-separated sector angles (deg)")
@_output_option
@click.pass_context
def sweep(ctx, theta_min, theta_max, step, betas, output):
    """Dimension sweep over a fold-angle grid, as CSV."""
    try:
        beta_list = [float(b) for b in betas.split(",") if b.strip()]
    except ValueError:
        raise click.UsageError(f"--betas must be comma-separated numbers, got {betas!r}")
    resp = _post(ctx, "/v1/export/sweep", {
        "theta_min": theta_min, "theta_max": theta_max,
        "step": step, "betas": beta_list})
    _emit(resp.text, output)


@main.command()
@click.option("--theta", type=float, required=True, help="fold angle (deg)")
@click.option("--fl", type=float, default=None, help="lateral cable force (N)")
@click.option("--mu", type=float, default=None, help="base friction coefficient")
@click.option("--mass", type=float, default=None, help="beam mass (kg)")
@click.option("--load", type=float, default=None, help="external load (N)")
@_output_option
@click.pass_context
def force(ctx, theta, fl, mu, mass, load, output):
    """Vertical counterbalance force from the equilibrium model."""
    data = _post(ctx, "/v1/force", {"theta": theta, "fl": fl, "mu": mu,
                                    "mass": mass, "load": load}).json()
    _emit(_csv_row(
        ["theta_deg", "vertical_force_n", "r_a_n", "r_b_n", "f_a_n",
         "h_mm", "q_mm", "flagged"],
        [data["theta_deg"], data["vertical_force_n"], data["r_a_n"],
         data["r_b_n"], data["f_a_n"], data["h_mm"], data["q_mm"],
         "true" if data["flagged"] else "false"]), output)


@main.command()
@click.option("--servo", type=float, required=True, help="servo angle (deg)")
@click.option("--mode", type=click.Choice(["calibrated", "geometric"]),
              default="calibrated", show_default=True)
@click.option("--voltage", type=float, default=5.0, show_default=True)
@_output_option
@click.pass_context
def actuate(ctx, servo, mode, voltage, output):
    """Fold angle, motion time and power for one servo command."""
    data = _post(ctx, "/v1/actuate", {"servo": servo, "mode": mode,
                                      "voltage": voltage}).json()
    _emit(_csv_row(
        ["servo_deg", "mode", "voltage_v", "theta_deg", "cable_mm",
         "time_s", "power_w"],
        [data["servo_deg"], data["mode"], data["voltage"], data["theta_deg"],
         data["cable_mm"], data["time_s"], data["power_w"]]), output)


@main.command()
@click.option("--angles", default="0,30,60,90,120", show_default=True,
              help="comma-separated servo angles (deg)")
@_output_option
@click.pass_context
def testbed(ctx, angles, output):
    """Simulated contact forces over the sensing locations, as CSV."""
    try:
        angle_list = [float(a) for a in angles.split(",") if a.strip()]
    except ValueError:
        raise click.UsageError(f"--angles must be comma-separated numbers, got {angles!r}")
    resp = _post(ctx, "/v1/export/testbed", {"angles": angle_list})
    _emit(resp.text, output)


@main.command()
@click.option("--theta", type=float, required=True, help="fold angle (deg)")
@_output_option
@click.pass_context
def mesh(ctx, theta, output):
    """Folded structure as a Wavefront OBJ quad mesh."""
    _emit(_post(ctx, "/v1/export/mesh", {"theta": theta}).text, output)


@main.command()
@_output_option
@click.pass_context
def crease(ctx, output):
    """Flat crease pattern with hole marks, as SVG."""
    _emit(_post(ctx, "/v1/export/crease", {}).text, output)


@main.command()
@click.option("--angles", default="0,30,60,90,120", show_default=True,
              help="servo angles for the testbed section")
@_output_option
@click.pass_context
def report(ctx, angles, output):
    """Plain-text report comparing simulated values with reference figures."""
    try:
        angle_list = [float(a) for a in angles.split(",") if a.strip()]
    except ValueError:
        raise click.UsageError(f"--angles must be comma-separated numbers, got {angles!r}")
    _emit(_post(ctx, "/v1/export/report", {"angles": angle_list}).text, output)


if __name__ == "__main__":
    main()
