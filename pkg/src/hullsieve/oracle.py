"""Reference hulls used to check the pipeline.

:func:`monotone_chain` (coordinate sort, two chains) is also the timing
baseline.  :func:`brute_force_hull` enumerates candidate edges and is only
meant for a few dozen points.  Both use the same orientation expression as
the pipeline, so equal inputs give equal decisions.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .errors import TooLargeError
from .geom import Turn, as_points, cross, cross_nb, orient
from .hull import Hull

BRUTE_FORCE_CAP = 64


@njit(cache=True)
def _chain(x, y, out):
    n = x.shape[0]
    k = 0
    for i in range(n):
        while k >= 2 and cross_nb(x[out[k - 2]], y[out[k - 2]],
                                  x[out[k - 1]], y[out[k - 1]], x[i], y[i]) <= 0.0:
            k -= 1
        out[k] = i
        k += 1
    lower = k + 1
    for i in range(n - 2, -1, -1):
        while k >= lower and cross_nb(x[out[k - 2]], y[out[k - 2]],
                                      x[out[k - 1]], y[out[k - 1]], x[i], y[i]) <= 0.0:
            k -= 1
        out[k] = i
        k += 1
    return k - 1


def _lowest_first(verts: np.ndarray) -> np.ndarray:
    y = verts[:, 1]
    cand = np.flatnonzero(y == y.min())
    start = cand[np.argmin(verts[cand, 0])]
    return np.roll(verts, -start, axis=0)


def monotone_chain(points) -> Hull:
    pts = as_points(points)
    x = pts[:, 0]
    order = np.argsort(x)
    xs = x[order]
    if np.any(xs[1:] == xs[:-1]):
        order = np.lexsort((pts[:, 1], x))
    s = pts[order]
    distinct = np.ones(s.shape[0], dtype=bool)
    distinct[1:] = (s[1:, 0] != s[:-1, 0]) | (s[1:, 1] != s[:-1, 1])
    s = s[distinct]
    if s.shape[0] == 1:
        return Hull(s)
    out = np.empty(2 * s.shape[0], dtype=np.int64)
    k = _chain(np.ascontiguousarray(s[:, 0]), np.ascontiguousarray(s[:, 1]), out)
    return Hull(_lowest_first(s[out[:k]]))


def _between(a, b, p) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def brute_force_hull(points, cap: int = BRUTE_FORCE_CAP) -> Hull:
    """O(n^3) hull: keep every directed pair with no point to its right."""
    pts = as_points(points)
    if pts.shape[0] > cap:
        raise TooLargeError(f"brute force limited to {cap} points, got {pts.shape[0]}")
    uniq = list(dict.fromkeys(map(tuple, pts.tolist())))
    if len(uniq) == 1:
        return Hull(uniq)

    if all(orient(uniq[0], uniq[1], p) is Turn.COLLINEAR for p in uniq[2:]):
        # both directions of the extreme pair would pass the edge test
        lo = min(uniq, key=lambda p: (p[1], p[0]))
        far = max(uniq, key=lambda p: (p[0] - lo[0]) ** 2 + (p[1] - lo[1]) ** 2)
        return Hull([lo, far])

    succ = {}
    for a in uniq:
        for b in uniq:
            if a == b:
                continue
            ok = True
            for p in uniq:
                if p == a or p == b:
                    continue
                d = cross(a, b, p)
                if d < 0.0 or (d == 0.0 and not _between(a, b, p)):
                    ok = False
                    break
            if ok:
                succ[a] = b

    start = min(succ, key=lambda p: (p[1], p[0]))
    cycle = [start]
    v = succ[start]
    while v != start:
        cycle.append(v)
        v = succ[v]
        if len(cycle) > len(uniq):
            raise RuntimeError("hull edges do not close into a cycle")
    return Hull(cycle)


def strictly_inside_hull(hull: Hull, p) -> bool:
    v = hull.vertices
    k = v.shape[0]
    if k < 3:
        return False
    return all(cross(v[i], v[(i + 1) % k], p) > 0.0 for i in range(k))


def strictly_inside_mask(hull: Hull, points) -> np.ndarray:
    """Vectorised :func:`strictly_inside_hull` over many points."""
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    v = hull.vertices
    k = v.shape[0]
    if k < 3 or pts.shape[0] == 0:
        return np.zeros(pts.shape[0], dtype=bool)
    inside = np.ones(pts.shape[0], dtype=bool)
    px, py = pts[:, 0], pts[:, 1]
    for i in range(k):
        ax, ay = v[i]
        bx, by = v[(i + 1) % k]
        inside &= (bx - ax) * (py - ay) - (by - ay) * (px - ax) > 0.0
    return inside
