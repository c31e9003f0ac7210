"""First discard round: the four axis-extreme points and their quadrilateral."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import LengthMismatchError
from .geom import as_points, cross_nb


@dataclass(frozen=True)
class ExtremeQuad:
    """Indices of the min-x, min-y, max-x and max-y points (lowest index on ties)."""

    i_minx: int
    i_miny: int
    i_maxx: int
    i_maxy: int

    def ccw_indices(self) -> tuple[int, int, int, int]:
        return self.i_minx, self.i_miny, self.i_maxx, self.i_maxy


def find_extremes(points) -> ExtremeQuad:
    pts = as_points(points)
    x = pts[:, 0]
    y = pts[:, 1]
    # argmin/argmax return the first occurrence on ties
    return ExtremeQuad(
        i_minx=int(np.argmin(x)),
        i_miny=int(np.argmin(y)),
        i_maxx=int(np.argmax(x)),
        i_maxy=int(np.argmax(y)),
    )


@njit(cache=True)
def _flag_outside_quad(x, y, qx, qy, out):
    ax, bx, cx, dx = qx[0], qx[1], qx[2], qx[3]
    ay, by, cy, dy = qy[0], qy[1], qy[2], qy[3]
    for i in range(x.shape[0]):
        px = x[i]
        py = y[i]
        inside = (
            cross_nb(ax, ay, bx, by, px, py) > 0.0
            and cross_nb(bx, by, cx, cy, px, py) > 0.0
            and cross_nb(cx, cy, dx, dy, px, py) > 0.0
            and cross_nb(dx, dy, ax, ay, px, py) > 0.0
        )
        out[i] = 0 if inside else 1


def quad_is_degenerate(pts: np.ndarray, quad: ExtremeQuad) -> bool:
    """True when two quad vertices coincide or the quad has no positive area."""
    verts = pts[list(quad.ccw_indices())]
    for i in range(4):
        for j in range(i + 1, 4):
            if verts[i, 0] == verts[j, 0] and verts[i, 1] == verts[j, 1]:
                return True
    x = verts[:, 0]
    y = verts[:, 1]
    twice_area = np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y)
    return not twice_area > 0.0


def classify_quad(points, quad: ExtremeQuad) -> np.ndarray:
    """Keep-flags (uint8): 0 for points strictly inside the extreme quadrilateral.

    Boundary points, the extremes themselves, and every point of a degenerate
    quadrilateral keep flag 1.
    """
    pts = as_points(points)
    n = pts.shape[0]
    if quad_is_degenerate(pts, quad):
        return np.ones(n, dtype=np.uint8)
    idx = list(quad.ccw_indices())
    flags = np.empty(n, dtype=np.uint8)
    _flag_outside_quad(
        pts[:, 0], pts[:, 1],
        np.ascontiguousarray(pts[idx, 0]), np.ascontiguousarray(pts[idx, 1]),
        flags,
    )
    return flags


def compact(points, flags) -> np.ndarray:
    """Points whose flag is 1, in input order."""
    pts = as_points(points, allow_empty=True)
    flags = np.asarray(flags)
    if flags.shape != (pts.shape[0],):
        raise LengthMismatchError(
            f"{flags.shape[0] if flags.ndim else 0} flags for {pts.shape[0]} points"
        )
    return pts[flags.astype(bool, copy=False)]


def round1(points) -> tuple[np.ndarray, ExtremeQuad, np.ndarray]:
    """Run the whole first round; returns ``(survivors, quad, flags)``."""
    pts = as_points(points)
    quad = find_extremes(pts)
    flags = classify_quad(pts, quad)
    return compact(pts, flags), quad, flags
