"""3D realization of the folded tessellation as a shared-vertex quad mesh.

One unit folds into four parallelogram facets spanned by two edge vectors:
the corrugation step (q, 0, +-h) along the length and the herringbone step
(+-xs, ys, 0) along the width, where q = p sin(theta/2), h = p cos(theta/2),
xs = p cos(phi/2) and ys = p sin(phi/2).  Tiling those steps over a
(2m+1) x (2n+1) vertex grid reproduces the closed-form extents (l, w, h)
exactly, which is the construction's correctness check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import FoldParams, _check_theta, cos_half_deg, phi_from_theta, sin_half_deg


@dataclass(frozen=True, eq=False)
class Mesh:
    """Quad mesh: vertices (V, 3) float64 in mm, faces (F, 4) int vertex indices."""

    vertices: np.ndarray
    faces: np.ndarray

    @property
    def extents(self) -> tuple[float, float, float]:
        """Axis-aligned bounding box side lengths (x, y, z) in mm."""
        span = self.vertices.max(axis=0) - self.vertices.min(axis=0)
        return float(span[0]), float(span[1]), float(span[2])


def folded_mesh(params: FoldParams, theta: float) -> Mesh:
    """Build the folded structure at theta (deg) as a watertight quad mesh.

    Produces 4*n*m parallelogram facets over (2n+1)*(2m+1) shared vertices;
    the bounding box equals dimensions() by construction.
    """
    _check_theta(theta)
    phi = phi_from_theta(params, theta)
    q = params.p * sin_half_deg(theta)
    h = params.p * cos_half_deg(theta)
    xs = params.p * cos_half_deg(phi)
    ys = params.p * sin_half_deg(phi)

    cols = 2 * params.n + 1
    rows = 2 * params.m + 1
    i = np.arange(rows)[:, None]  # row index, along width
    j = np.arange(cols)[None, :]  # column index, along length

    x = j * q + (i % 2) * xs
    y = i * ys + np.zeros_like(x)
    z = (j % 2) * h + np.zeros_like(x)
    vertices = np.stack([x, y, z], axis=-1).reshape(-1, 3)

    fi = np.arange(rows - 1)[:, None]
    fj = np.arange(cols - 1)[None, :]
    v00 = fi * cols + fj
    faces = np.stack(
        [v00, v00 + 1, v00 + cols + 1, v00 + cols], axis=-1).reshape(-1, 4)

    return Mesh(vertices=vertices, faces=faces.astype(np.int64))
