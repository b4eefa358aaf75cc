"""Closed-form fold kinematics for a herringbone-tessellated surface.

A structure of ``n x m`` rhombic-facet units (facet side ``p`` mm, sector
angle ``beta`` deg) is parameterized by a single fold angle ``theta`` in
degrees: 180 is the flat sheet, smaller values are more folded.  All public
angles are degrees, all lengths millimeters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

from .errors import DomainError


def sin_half_deg(angle_deg: float) -> float:
    """sin(angle/2) for an angle in degrees."""
    return math.sin(math.radians(angle_deg) / 2.0)


def cos_half_deg(angle_deg: float) -> float:
    """cos(angle/2) for an angle in degrees; exactly 0.0 at 180 (flat state)."""
    if angle_deg == 180.0:
        return 0.0
    return math.cos(math.radians(angle_deg) / 2.0)


def _check_theta(theta: float) -> None:
    if not 0.0 < theta <= 180.0:
        raise DomainError(
            f"fold angle theta must be in (0, 180] degrees, got {theta}",
            param="theta", value=theta)


@dataclass(frozen=True)
class FoldParams:
    """Structure definition: facet side p (mm), sector angle beta (deg),
    n units along the length, m along the width, and the unactuated
    (neutral) fold angle in degrees."""

    p: float
    beta: float
    n: int
    m: int
    theta_neutral: float = 180.0

    def __post_init__(self):
        if not self.p > 0:
            raise DomainError(f"facet side p must be > 0 mm, got {self.p}",
                              param="p", value=self.p)
        if not 0.0 < self.beta < 90.0:
            raise DomainError(
                f"sector angle beta must be in (0, 90) degrees, got {self.beta}",
                param="beta", value=self.beta)
        if not (isinstance(self.n, int) and self.n >= 1):
            raise DomainError(f"unit count n must be an integer >= 1, got {self.n}",
                              param="n", value=self.n)
        if not (isinstance(self.m, int) and self.m >= 1):
            raise DomainError(f"unit count m must be an integer >= 1, got {self.m}",
                              param="m", value=self.m)
        if not 0.0 < self.theta_neutral <= 180.0:
            raise DomainError(
                f"neutral fold angle must be in (0, 180] degrees, got {self.theta_neutral}",
                param="theta_neutral", value=self.theta_neutral)

    @property
    def units(self) -> int:
        return self.n * self.m


#: Desk-scale reference design: 4 x 3 units, 22 mm facets, 70 deg sector
#: angle, neutral fold angle 130 deg.
PROTOTYPE = FoldParams(p=22.0, beta=70.0, n=4, m=3, theta_neutral=130.0)


@dataclass(frozen=True)
class FoldState:
    """A single fold configuration, theta in degrees (180 = flat)."""

    theta: float

    def __post_init__(self):
        _check_theta(self.theta)


@dataclass(frozen=True)
class Dimensions:
    """Folded extents in mm plus the derived in-plane angle phi (deg)."""

    h: float
    l: float
    w: float
    phi: float


class SweepRow(NamedTuple):
    beta_deg: float
    theta_deg: float
    h_mm: float
    l_mm: float
    w_mm: float


@dataclass(frozen=True)
class DimensionTable:
    """Rows of (beta, theta, h, l, w) produced by :func:`sweep`."""

    rows: tuple[SweepRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def phi_from_theta(params: FoldParams, theta: float) -> float:
    """In-plane angle phi (deg) between facet edges at fold angle theta (deg).

    phi = 2 acos(cos(beta) sin(theta/2)); strictly decreasing in theta,
    equal to 2 beta exactly at the flat state.
    """
    _check_theta(theta)
    if theta == 180.0:
        return 2.0 * params.beta
    c = math.cos(math.radians(params.beta)) * sin_half_deg(theta)
    return 2.0 * math.degrees(math.acos(c))


def dimensions(params: FoldParams, theta: float) -> Dimensions:
    """Height, length and width (mm) of the folded structure at theta (deg)."""
    phi = phi_from_theta(params, theta)
    q = params.p * sin_half_deg(theta)
    h = params.p * cos_half_deg(theta)
    l = params.n * (2.0 * q) + params.p * cos_half_deg(phi)
    w = params.m * (2.0 * params.p * sin_half_deg(phi))
    return Dimensions(h=h, l=l, w=w, phi=phi)


def theta_from_height(params: FoldParams, h: float) -> float:
    """Fold angle (deg) at which the structure height equals h (mm).

    Inverts h = p cos(theta/2); h must lie in [0, p).
    """
    if not 0.0 <= h < params.p:
        raise DomainError(
            f"height {h} mm unreachable for facet length p={params.p} mm "
            "(valid range 0 <= h < p)", param="h", value=h)
    return 2.0 * math.degrees(math.acos(h / params.p))


def sweep(params: FoldParams, theta_min: float, theta_max: float, step: float,
          betas: list[float]) -> DimensionTable:
    """Dimensions over an inclusive theta grid for each sector angle in betas.

    Rows are beta-major in the given beta order, theta ascending within.
    """
    if not 0.0 < theta_min < theta_max <= 180.0:
        raise DomainError(
            f"need 0 < theta_min < theta_max <= 180, got [{theta_min}, {theta_max}]",
            param="theta_min", value=(theta_min, theta_max))
    if not step > 0.0:
        raise DomainError(f"step must be > 0 degrees, got {step}",
                          param="step", value=step)
    if not betas:
        raise DomainError("betas must be nonempty", param="betas", value=betas)
    for b in betas:
        if not 0.0 < b < 90.0:
            raise DomainError(
                f"sector angle beta must be in (0, 90) degrees, got {b}",
                param="betas", value=b)

    thetas = []
    k = 0
    while True:
        theta = theta_min + k * step
        if theta > theta_max + 1e-9:
            break
        thetas.append(min(theta, theta_max))
        k += 1

    rows = []
    for b in betas:
        p_b = replace(params, beta=b)
        for theta in thetas:
            d = dimensions(p_b, theta)
            rows.append(SweepRow(b, theta, d.h, d.l, d.w))
    return DimensionTable(rows=tuple(rows))
