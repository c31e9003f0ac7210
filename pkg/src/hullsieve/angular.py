"""Polar annotation, angular sort and the split at the farthest point."""

from __future__ import annotations

from dataclasses import dataclass, field

import math

import numpy as np
from numba import njit

from .errors import IndexOutOfRangeError, TooFewPointsError
from .geom import as_points

#: value stored in ``angle[0]`` (the anchor has no angle)
ANCHOR_ANGLE = -np.inf


@dataclass
class AnnotatedBuffer:
    """Points with the anchor at index 0 and per-point polar keys.

    ``key_order``, when set, is the permutation of indices ``1..n-1`` that
    sorts the tail by ``(angle, dist2)``.  :func:`annotate` computes it
    anyway to find duplicates and hands it on so the sort is not repeated.
    """

    pts: np.ndarray
    angle: np.ndarray
    dist2: np.ndarray
    key_order: np.ndarray | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return self.pts.shape[0]

    @property
    def anchor(self) -> np.ndarray:
        return self.pts[0]

    def is_sorted(self) -> bool:
        a = self.angle[1:]
        d = self.dist2[1:]
        if a.size < 2:
            return True
        da = a[1:] - a[:-1]
        return bool(np.all((da > 0) | ((da == 0) & (d[1:] >= d[:-1]))))


@dataclass(frozen=True)
class RegionSplit:
    """Position ``l`` of the farthest point in a sorted buffer of ``n`` points."""

    l: int
    n: int

    @property
    def right(self) -> range:
        return range(1, self.l)

    @property
    def left(self) -> range:
        return range(self.l + 1, self.n)


@njit(cache=True)
def _polar_keys(x, y, ax, ay, angle, dist2):
    # libm atan2 (as math.atan2): scaled copies of a vector get the same
    # angle, which np.arctan2 does not guarantee
    for i in range(x.shape[0]):
        dx = x[i] - ax
        dy = y[i] - ay
        angle[i] = math.atan2(dy, dx)
        dist2[i] = dx * dx + dy * dy


def select_anchor(points) -> int:
    """Index of the lowest point; ties go to smaller x, then to lower index."""
    pts = as_points(points)
    y = pts[:, 1]
    lowest = np.flatnonzero(y == y.min())
    xs = pts[lowest, 0]
    return int(lowest[np.argmin(xs)])


def _key_order(angle: np.ndarray, dist2: np.ndarray) -> np.ndarray:
    """Permutation equal to a stable sort on ``(angle, dist2)``."""
    if angle.size < 2:
        return np.arange(angle.size)
    order = np.argsort(angle)
    s = angle[order]
    if np.any(s[1:] == s[:-1]):
        # equal angles: only a stable composite sort fixes the tie order
        order = np.lexsort((dist2, angle))
    return order


def _duplicate_mask(pts, angle, dist2, order) -> np.ndarray:
    """Mark every repeat of an earlier point.

    Identical points get bitwise-identical keys, so repeats can only sit in
    runs of equal keys in `order`.
    """
    drop = np.zeros(pts.shape[0], dtype=bool)
    if order.size < 2:
        return drop
    sa = angle[order]
    sd = dist2[order]
    eq = (sa[1:] == sa[:-1]) & (sd[1:] == sd[:-1])
    if not eq.any():
        return drop
    run_id = np.concatenate(([0], np.cumsum(~eq)))
    in_run = np.zeros(order.size, dtype=bool)
    in_run[1:] |= eq
    in_run[:-1] |= eq
    members = order[in_run]
    runs = run_id[in_run]
    x = pts[members, 0]
    y = pts[members, 1]
    by = np.lexsort((members, y, x, runs))
    m, r, x, y = members[by], runs[by], x[by], y[by]
    repeat = (r[1:] == r[:-1]) & (x[1:] == x[:-1]) & (y[1:] == y[:-1])
    drop[m[1:][repeat]] = True
    return drop


def annotate(points, anchor_index: int) -> AnnotatedBuffer:
    """Move the anchor to the front, drop exact duplicates, attach polar keys.

    The first occurrence of a repeated point is kept and the surviving points
    keep their input order.
    """
    pts = as_points(points)
    n = pts.shape[0]
    if not 0 <= anchor_index < n:
        raise IndexOutOfRangeError(f"anchor index {anchor_index} out of range for {n} points")
    ax, ay = pts[anchor_index]
    rest = pts[(pts[:, 0] != ax) | (pts[:, 1] != ay)]

    angle = np.empty(rest.shape[0])
    dist2 = np.empty(rest.shape[0])
    _polar_keys(rest[:, 0], rest[:, 1], ax, ay, angle, dist2)
    order = _key_order(angle, dist2)

    drop = _duplicate_mask(rest, angle, dist2, order)
    if drop.any():
        keep = ~drop
        new_index = np.cumsum(keep) - 1
        order = new_index[order[keep[order]]]
        rest, angle, dist2 = rest[keep], angle[keep], dist2[keep]

    out_pts = np.empty((rest.shape[0] + 1, 2))
    out_pts[0] = ax, ay
    out_pts[1:] = rest
    return AnnotatedBuffer(
        pts=out_pts,
        angle=np.concatenate(([ANCHOR_ANGLE], angle)),
        dist2=np.concatenate(([0.0], dist2)),
        key_order=order + 1,
    )


def sort_by_angle(buf: AnnotatedBuffer) -> AnnotatedBuffer:
    """Stable sort of indices ``1..n-1`` by ``(angle, dist2)``; the anchor stays first."""
    if buf.key_order is not None:
        tail = buf.key_order
    else:
        tail = _key_order(buf.angle[1:], buf.dist2[1:]) + 1
    perm = np.concatenate(([0], tail))
    return AnnotatedBuffer(pts=buf.pts[perm], angle=buf.angle[perm], dist2=buf.dist2[perm])


def split_regions(buf: AnnotatedBuffer) -> RegionSplit:
    n = len(buf)
    if n < 2:
        raise TooFewPointsError(f"need at least 2 points to split, got {n}")
    return RegionSplit(l=1 + int(np.argmax(buf.dist2[1:])), n=n)


def annotate_sorted(points) -> AnnotatedBuffer:
    """Anchor selection, annotation and sort in one call."""
    pts = as_points(points)
    return sort_by_angle(annotate(pts, select_anchor(pts)))
