"""Text emitters: sweep/testbed CSV, mesh OBJ, crease-pattern SVG, report.

All emitters are pure text transformations and byte-deterministic.  Tabular
values carry 6 significant digits with units in the column names; OBJ
vertices keep 9 significant digits so the bounding box survives a round
trip through text at 1e-6 relative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import SystemConfig, serialize_config
from .forces import EquilibriumResult
from .geometry import DimensionTable, Dimensions
from .mesh import Mesh
from .pattern import CreasePattern, MOUNTAIN
from .testbed import ContactLocation, ContactMap

#: Measured reference figures of the desk-scale prototype, echoed by the
#: report next to simulated values.
REFERENCE_POWER_W = 9.625
REFERENCE_SWEEP_TIME_S = 0.48
REFERENCE_HEIGHT_CHANGE_MM = 12.0


def sig6(value: float) -> str:
    """6 significant digits, trailing zeros kept (flat heights read 0.00000)."""
    return format(float(value), "#.6g")


def _sig9(value: float) -> str:
    return format(float(value), ".9g")


def write_sweep_csv(table: DimensionTable) -> str:
    """CSV of a dimension sweep, beta-major and theta-ascending."""
    rows = sorted(table.rows, key=lambda r: (r.beta_deg, r.theta_deg))
    lines = ["beta_deg,theta_deg,h_mm,l_mm,w_mm"]
    for r in rows:
        lines.append(",".join(sig6(v) for v in
                              (r.beta_deg, r.theta_deg, r.h_mm, r.l_mm, r.w_mm)))
    return "\n".join(lines) + "\n"


def write_testbed_csv(maps: list[ContactMap],
                      locations: tuple[ContactLocation, ...]) -> str:
    """CSV of simulated contact forces, one row per (servo angle, location)."""
    connected = {loc.location_id: loc.cable_connected for loc in locations}
    lines = ["servo_deg,theta_deg,height_mm,area_factor,location_id,"
             "cable_connected,force_n,note"]
    for cm in maps:
        prefix = ",".join(sig6(v) for v in
                          (cm.servo_deg, cm.theta_deg, cm.height_mm, cm.area_factor))
        if cm.flagged:
            lines.append(f"{prefix},,,,singular")
            continue
        for loc_id in sorted(cm.forces):
            tag = "true" if connected.get(loc_id, False) else "false"
            lines.append(f"{prefix},{loc_id},{tag},{sig6(cm.forces[loc_id])},")
    return "\n".join(lines) + "\n"


def write_mesh_obj(mesh: Mesh) -> str:
    """Wavefront-style text: '# units' comment, v records, then quad f records."""
    lines = ["# folded structure mesh", "# units: mm"]
    for vx, vy, vz in mesh.vertices:
        lines.append(f"v {_sig9(vx)} {_sig9(vy)} {_sig9(vz)}")
    for face in mesh.faces:
        lines.append("f " + " ".join(str(int(i) + 1) for i in face))
    return "\n".join(lines) + "\n"


def write_crease_svg(pattern: CreasePattern) -> str:
    """SVG 1.1 drawing: solid mountain lines, dashed valley lines, hole circles."""
    w = sig6(pattern.width)
    h = sig6(pattern.height)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- crease pattern; units: mm -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}mm" height="{h}mm" '
        f'viewBox="0 0 {w} {h}">',
    ]

    def line(seg_start, seg_end, cls, dash=""):
        (x1, y1), (x2, y2) = seg_start, seg_end
        out.append(
            f'  <line class="{cls}" x1="{sig6(x1)}" y1="{sig6(y1)}" '
            f'x2="{sig6(x2)}" y2="{sig6(y2)}" stroke-width="0.2"{dash}/>')

    out.append('<g stroke="#dddddd" fill="none">')
    for facet in pattern.facets:
        points = " ".join(f"{sig6(x)},{sig6(y)}" for x, y in facet)
        out.append(f'  <polygon class="facet" points="{points}" '
                   'stroke-width="0.1"/>')
    out.append("</g>")
    out.append('<g stroke="#000000">')
    for seg in pattern.border:
        line(seg[0], seg[1], "border")
    out.append("</g>")
    out.append('<g stroke="#cc0000">')
    for crease in pattern.creases:
        if crease.kind == MOUNTAIN:
            line(crease.start, crease.end, "mountain")
    out.append("</g>")
    out.append('<g stroke="#0000cc">')
    for crease in pattern.creases:
        if crease.kind != MOUNTAIN:
            line(crease.start, crease.end, "valley", ' stroke-dasharray="2,1.5"')
    out.append("</g>")
    out.append('<g stroke="#007700" fill="none">')
    for cx, cy in pattern.holes:
        out.append(f'  <circle class="hole" cx="{sig6(cx)}" cy="{sig6(cy)}" '
                   f'r="1" stroke-width="0.2"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class ReportData:
    """Optional result sections; omitted sections are skipped."""

    config: SystemConfig | None = None
    neutral_dims: Dimensions | None = None
    force: EquilibriumResult | None = None
    power_w: dict[float, float] | None = None       # voltage -> watts
    latency_s: dict[float, float] | None = None     # voltage -> full-sweep s
    height_mm: dict[float, float] | None = None     # servo angle -> mm
    testbed: tuple[ContactMap, ...] | None = None


def _deviation(simulated: float, reference: float) -> str:
    pct = (simulated - reference) / reference * 100.0
    return f"{sig6(simulated)} (reference {sig6(reference)}, deviation {pct:+.2f}%)"


def write_report(results: ReportData) -> str:
    """Plain-text report: simulated values next to the measured references."""
    lines = [
        "orifold simulation report",
        "units: mm, N, s, W; angles in degrees",
        "",
    ]
    if results.config is not None:
        lines.append("[configuration]")
        lines.extend(serialize_config(results.config).rstrip("\n").splitlines())
        lines.append("")
    if results.neutral_dims is not None:
        d = results.neutral_dims
        lines.append("[neutral-state dimensions]")
        lines.append(f"height_mm={sig6(d.h)} length_mm={sig6(d.l)} "
                     f"width_mm={sig6(d.w)} phi_deg={sig6(d.phi)}")
        lines.append("")
    if results.force is not None:
        f = results.force
        lines.append("[equilibrium]")
        lines.append(f"vertical_force_n={sig6(f.vertical_force)} r_a_n={sig6(f.r_a)} "
                     f"r_b_n={sig6(f.r_b)} f_a_n={sig6(f.f_a)} flagged={f.flagged}")
        lines.append("")
    if results.power_w is not None:
        lines.append("[power]")
        for voltage in sorted(results.power_w):
            watts = results.power_w[voltage]
            if voltage == 5.0:
                lines.append(f"power_w @ {sig6(voltage)} V: "
                             f"{_deviation(watts, REFERENCE_POWER_W)}")
            else:
                lines.append(f"power_w @ {sig6(voltage)} V: {sig6(watts)}")
        lines.append("")
    if results.latency_s is not None:
        lines.append("[latency, full 180 deg sweep]")
        for voltage in sorted(results.latency_s):
            secs = results.latency_s[voltage]
            if voltage == 5.0:
                lines.append(f"time_s @ {sig6(voltage)} V: "
                             f"{_deviation(secs, REFERENCE_SWEEP_TIME_S)}")
            else:
                lines.append(f"time_s @ {sig6(voltage)} V: {sig6(secs)}")
        lines.append("")
    if results.height_mm is not None:
        lines.append("[reported height]")
        for servo in sorted(results.height_mm):
            lines.append(f"height_mm @ servo {sig6(servo)}: "
                         f"{sig6(results.height_mm[servo])}")
        servos = sorted(results.height_mm)
        if len(servos) >= 2:
            change = results.height_mm[servos[-1]] - results.height_mm[servos[0]]
            lines.append("height_change_mm: "
                         f"{_deviation(change, REFERENCE_HEIGHT_CHANGE_MM)}")
        lines.append("")
    if results.testbed is not None:
        lines.append("[testbed contact forces]")
        for cm in results.testbed:
            if cm.flagged:
                lines.append(f"servo {sig6(cm.servo_deg)}: singular ({cm.note})")
                continue
            for loc_id in sorted(cm.forces):
                lines.append(f"servo {sig6(cm.servo_deg)} location {loc_id}: "
                             f"force_n={sig6(cm.forces[loc_id])}")
        lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"
