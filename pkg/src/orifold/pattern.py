"""Flat crease pattern with mountain/valley labels and cable-hole marks.

The flat layout is the theta=180 state of the folded grid: straight crease
rows run along the length, herringbone crease columns along the width.
Labels follow the fold-up convention used by :mod:`orifold.mesh` (odd
columns rise to the apexes); each facet carries two hole marks for cable
embedding, 2 mm diameter and 5 mm apart, centered on the facet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import FoldParams

MOUNTAIN = "mountain"
VALLEY = "valley"

HOLE_DIAMETER_MM = 2.0
HOLE_SPACING_MM = 5.0

Point = tuple[float, float]


@dataclass(frozen=True)
class Crease:
    start: Point
    end: Point
    kind: str  # MOUNTAIN or VALLEY


@dataclass(frozen=True)
class CreasePattern:
    facets: tuple[tuple[Point, Point, Point, Point], ...]
    creases: tuple[Crease, ...]
    border: tuple[tuple[Point, Point], ...]
    holes: tuple[Point, ...]  # hole centers; diameter HOLE_DIAMETER_MM
    width: float   # flat extent along the length axis (mm)
    height: float  # flat extent along the width axis (mm)


def _row_kind(i: int, j: int) -> str:
    # straight crease rows: segments alternate with column parity and the
    # sense flips row to row
    return MOUNTAIN if (i + j) % 2 == 0 else VALLEY


def _col_kind(j: int) -> str:
    # herringbone columns fold to the apex (odd) or the trough (even)
    return MOUNTAIN if j % 2 == 1 else VALLEY


def crease_pattern(params: FoldParams) -> CreasePattern:
    """Flat 2D pattern of 4*n*m rhombic facets (side p, interior angle beta)."""
    p = params.p
    xs = p * math.cos(math.radians(params.beta))
    ys = p * math.sin(math.radians(params.beta))
    rows = 2 * params.m + 1
    cols = 2 * params.n + 1

    def pt(i: int, j: int) -> Point:
        return (j * p + (i % 2) * xs, i * ys)

    facets = []
    holes = []
    half = HOLE_SPACING_MM / 2.0
    for i in range(rows - 1):
        for j in range(cols - 1):
            c00, c01 = pt(i, j), pt(i, j + 1)
            c11, c10 = pt(i + 1, j + 1), pt(i + 1, j)
            facets.append((c00, c01, c11, c10))
            cx = (c00[0] + c01[0] + c11[0] + c10[0]) / 4.0
            cy = (c00[1] + c01[1] + c11[1] + c10[1]) / 4.0
            holes.append((cx - half, cy))
            holes.append((cx + half, cy))

    creases = []
    border = []
    for i in range(rows):  # row segments, along the length
        for j in range(cols - 1):
            seg = (pt(i, j), pt(i, j + 1))
            if i == 0 or i == rows - 1:
                border.append(seg)
            else:
                creases.append(Crease(seg[0], seg[1], _row_kind(i, j)))
    for j in range(cols):  # column segments, along the width
        for i in range(rows - 1):
            seg = (pt(i, j), pt(i + 1, j))
            if j == 0 or j == cols - 1:
                border.append(seg)
            else:
                creases.append(Crease(seg[0], seg[1], _col_kind(j)))

    width = (cols - 1) * p + xs
    height = (rows - 1) * ys
    return CreasePattern(facets=tuple(facets), creases=tuple(creases),
                         border=tuple(border), holes=tuple(holes),
                         width=width, height=height)
