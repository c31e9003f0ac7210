"""Geometric primitives shared by the pipeline stages and the oracles.

Every orientation decision in the package goes through the same floating
point expression, ``(b - a) x (c - a)`` evaluated as

    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)

with exact zero meaning collinear.  The scalar :func:`cross`, the jitted
:func:`cross_nb` and the vectorised kernels all evaluate it in this order,
so every stage agrees on every triple.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple, Sequence

import numpy as np
from numba import njit

from .errors import CoincidentWithAnchorError, EmptyInputError


class Point2(NamedTuple):
    x: float
    y: float


class Turn(enum.IntEnum):
    RIGHT = -1
    COLLINEAR = 0
    LEFT = 1


def cross(a, b, c) -> float:
    """Z-component of ``(b - a) x (c - a)``."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


@njit(cache=True, inline="always")
def cross_nb(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def orient(a, b, c) -> Turn:
    """Classify the turn ``a -> b -> c`` (LEFT is counterclockwise)."""
    d = cross(a, b, c)
    if d > 0.0:
        return Turn.LEFT
    if d < 0.0:
        return Turn.RIGHT
    return Turn.COLLINEAR


def polar_key(anchor, p) -> tuple[float, float]:
    """Return ``(angle, dist2)`` of `p` seen from `anchor`.

    The angle is measured counterclockwise from the positive x-axis.  With
    the anchor at the lowest point of the set it lies in ``[0, pi]``.
    """
    dx = p[0] - anchor[0]
    dy = p[1] - anchor[1]
    if dx == 0.0 and dy == 0.0:
        raise CoincidentWithAnchorError(f"point {tuple(p)} coincides with the anchor")
    return math.atan2(dy, dx), dx * dx + dy * dy


def as_points(points: Sequence | np.ndarray, *, allow_empty: bool = False) -> np.ndarray:
    """Coerce `points` to a C-contiguous ``(n, 2)`` float64 array.

    Rejects non-finite coordinates.  Negative zeros are normalised to +0.0 so
    that coordinate equality and angle computation agree.
    """
    arr = np.asarray(points, dtype=np.float64)
    if arr.size == 0:
        if allow_empty:
            return np.empty((0, 2), dtype=np.float64)
        raise EmptyInputError("no points given")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("point coordinates must be finite")
    if arr.flags.c_contiguous and not np.signbit(arr[arr == 0.0]).any():
        return arr
    # -0.0 + 0.0 == +0.0
    return np.ascontiguousarray(arr + 0.0)
