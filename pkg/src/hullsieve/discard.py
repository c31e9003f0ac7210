"""Second discard round over the angle-sorted points.

Right region (indices ``1..l-1``): walking upwards with a trailing point
``t`` (initially the anchor), a point strictly left of the directed line
``t -> P_l`` sits strictly inside the triangle ``(P0, t, P_l)`` and is
dropped; any other point becomes the new ``t``.  The left region
(``l+1..n-1``) is walked downwards from ``P_{n-1}`` with the mirror test.

The walk carries state from point to point.  The chunked variant cuts each
region into contiguous slices, and each slice restarts the walk from its own
first point.  Slices never read each other's points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .angular import AnnotatedBuffer
from .errors import IndexOutOfRangeError, LengthMismatchError, ZeroChunksError
from .geom import cross_nb

DEFAULT_CHUNKS = 1024


@dataclass(frozen=True)
class ChunkConfig:
    chunk_count: int = DEFAULT_CHUNKS

    def __post_init__(self):
        if self.chunk_count < 1:
            raise ZeroChunksError(f"chunk_count must be >= 1, got {self.chunk_count}")

    def slice_size(self, m: int) -> int:
        return -(-m // self.chunk_count)


@njit(cache=True)
def _walk_sequential(x, y, l, keep, witness):
    n = x.shape[0]
    lx = x[l]
    ly = y[l]

    t = 0
    for i in range(1, l):
        if cross_nb(x[t], y[t], lx, ly, x[i], y[i]) > 0.0:
            keep[i] = 0
            witness[i] = t
        else:
            t = i

    t = n - 1
    for i in range(n - 2, l, -1):
        if cross_nb(x[t], y[t], lx, ly, x[i], y[i]) < 0.0:
            keep[i] = 0
            witness[i] = t
        else:
            t = i


@njit(cache=True)
def _walk_chunked(x, y, l, chunk_count, keep):
    n = x.shape[0]
    lx = x[l]
    ly = y[l]

    m = l - 1
    if m > 0:
        size = (m + chunk_count - 1) // chunk_count
        for c in range(chunk_count):
            start = 1 + c * size
            if start >= l:
                break
            stop = min(start + size, l)
            t = start
            for i in range(start + 1, stop):
                if cross_nb(x[t], y[t], lx, ly, x[i], y[i]) > 0.0:
                    keep[i] = 0
                else:
                    t = i

    m = n - 1 - l
    if m > 0:
        size = (m + chunk_count - 1) // chunk_count
        for c in range(chunk_count):
            first = n - 1 - c * size
            if first <= l:
                break
            stop = max(first - size, l)
            t = first
            for i in range(first - 1, stop, -1):
                if cross_nb(x[t], y[t], lx, ly, x[i], y[i]) < 0.0:
                    keep[i] = 0
                else:
                    t = i


def _check_split(buf: AnnotatedBuffer, l: int) -> None:
    n = len(buf)
    if not 1 <= l <= n - 1:
        raise IndexOutOfRangeError(f"split index {l} invalid for {n} points")


def _coords(buf: AnnotatedBuffer):
    return np.ascontiguousarray(buf.pts[:, 0]), np.ascontiguousarray(buf.pts[:, 1])


def discard_sequential(buf: AnnotatedBuffer, l: int, *, return_witness: bool = False):
    """Single-pass walk over both regions; returns uint8 keep-flags.

    With ``return_witness=True`` also returns, for every dropped point, the
    index of the trailing point it was tested against (-1 for kept points).
    """
    _check_split(buf, l)
    n = len(buf)
    keep = np.ones(n, dtype=np.uint8)
    witness = np.full(n, -1, dtype=np.int64)
    x, y = _coords(buf)
    _walk_sequential(x, y, l, keep, witness)
    if return_witness:
        return keep, witness
    return keep


def discard_chunked(buf: AnnotatedBuffer, l: int, cfg: ChunkConfig | int = ChunkConfig()) -> np.ndarray:
    if not isinstance(cfg, ChunkConfig):
        cfg = ChunkConfig(int(cfg))
    _check_split(buf, l)
    keep = np.ones(len(buf), dtype=np.uint8)
    x, y = _coords(buf)
    _walk_chunked(x, y, l, cfg.chunk_count, keep)
    return keep


def stable_compact(buf: AnnotatedBuffer, flags) -> AnnotatedBuffer:
    """Drop flagged points while keeping the sorted order."""
    flags = np.asarray(flags)
    if flags.shape != (len(buf),):
        raise LengthMismatchError(f"{flags.size} flags for {len(buf)} points")
    if len(buf) and not flags[0]:
        raise ValueError("the anchor cannot be discarded")
    mask = flags.astype(bool, copy=False)
    return AnnotatedBuffer(pts=buf.pts[mask], angle=buf.angle[mask], dist2=buf.dist2[mask])
