"""Graham finalisation and the end-to-end pipeline."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np
from numba import njit

from . import angular, discard, prefilter
from .angular import AnnotatedBuffer, RegionSplit
from .errors import ZeroChunksError
from .geom import Point2, as_points, cross_nb


class Hull:
    """Strict hull vertices in counterclockwise order, starting at the lowest point.

    Degenerate inputs give one vertex (a single distinct point) or two
    (all points collinear).
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        self.vertices = np.asarray(vertices, dtype=np.float64).reshape(-1, 2)

    def __len__(self) -> int:
        return self.vertices.shape[0]

    def __iter__(self) -> Iterator[Point2]:
        for x, y in self.vertices.tolist():
            yield Point2(x, y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hull):
            return NotImplemented
        return np.array_equal(self.vertices, other.vertices)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Hull({len(self)} vertices)"

    def vertex_set(self) -> frozenset[tuple[float, float]]:
        return frozenset(map(tuple, self.vertices.tolist()))


@dataclass(frozen=True)
class PipelineConfig:
    chunk_count: int = discard.DEFAULT_CHUNKS
    enable_round1: bool = True
    enable_round2: bool = True
    chunked: bool = True

    def __post_init__(self):
        if self.chunk_count < 1:
            raise ZeroChunksError(f"chunk_count must be >= 1, got {self.chunk_count}")

    def label(self) -> str:
        parts = [f"chunks={self.chunk_count}" if self.chunked else "sequential"]
        if not self.enable_round1:
            parts.append("no-round1")
        if not self.enable_round2:
            parts.append("no-round2")
        return ",".join(parts)


@dataclass
class StageStats:
    """Survivor counts and wall times (milliseconds) of one pipeline run.

    A disabled round reports its input count.  ``n_after_round2`` counts
    points after duplicate removal.  ``t_annotate`` includes computing the
    angular key order, which duplicate removal needs; ``t_sort`` is the
    reordering of the buffer by that key order.
    """

    n_input: int
    n_after_round1: int
    n_after_round2: int
    hull_size: int
    t_round1: float = 0.0
    t_annotate: float = 0.0
    t_sort: float = 0.0
    t_round2: float = 0.0
    t_finalize: float = 0.0
    t_total: float = 0.0

    @property
    def remaining_r1_pct(self) -> float:
        return 100.0 * self.n_after_round1 / self.n_input

    @property
    def remaining_r2_pct(self) -> float:
        return 100.0 * self.n_after_round2 / self.n_input

    @property
    def t_filter(self) -> float:
        """Time spent before the final scan (the data-parallel side)."""
        return self.t_round1 + self.t_annotate + self.t_sort + self.t_round2


@dataclass
class PipelineTrace:
    """Intermediate state of a pipeline run, filled in when passed to it."""

    round1_input: np.ndarray | None = None
    quad: prefilter.ExtremeQuad | None = None
    round1_flags: np.ndarray | None = None
    sorted_buf: AnnotatedBuffer | None = None
    split: RegionSplit | None = None
    round2_flags: np.ndarray | None = None
    final_buf: AnnotatedBuffer | None = field(default=None, repr=False)

    def round1_discarded(self) -> np.ndarray:
        if self.round1_flags is None:
            return np.empty((0, 2))
        return self.round1_input[self.round1_flags == 0]

    def round2_discarded(self) -> np.ndarray:
        if self.round2_flags is None:
            return np.empty((0, 2))
        return self.sorted_buf.pts[self.round2_flags == 0]


@njit(cache=True)
def _graham(x, y, stack):
    n = x.shape[0]
    stack[0] = 0
    if n == 1:
        return 1
    stack[1] = 1
    k = 2
    for i in range(2, n):
        while k >= 2 and cross_nb(x[stack[k - 2]], y[stack[k - 2]],
                                  x[stack[k - 1]], y[stack[k - 1]], x[i], y[i]) <= 0.0:
            k -= 1
        stack[k] = i
        k += 1
    return k


def graham_finalize(buf: AnnotatedBuffer) -> Hull:
    """Stack scan over an angle-sorted, duplicate-free buffer."""
    x = np.ascontiguousarray(buf.pts[:, 0])
    y = np.ascontiguousarray(buf.pts[:, 1])
    stack = np.empty(len(buf), dtype=np.int64)
    k = _graham(x, y, stack)
    return Hull(buf.pts[stack[:k]])


def _ms(t0: float, t1: float) -> float:
    return (t1 - t0) * 1e3


def full_pipeline(
    points,
    cfg: PipelineConfig | None = None,
    *,
    trace: PipelineTrace | None = None,
    tamper: Callable[[AnnotatedBuffer, RegionSplit, np.ndarray], None] | None = None,
) -> tuple[Hull, StageStats]:
    """Compute the hull with both discard rounds in front of the Graham scan.

    `tamper`, if given, may modify the second-round keep-flags in place before
    they are applied; it exists to check that verification catches bad flags.
    """
    cfg = cfg or PipelineConfig()
    clock = time.perf_counter
    t_start = clock()
    pts = as_points(points)
    n_input = pts.shape[0]

    t0 = clock()
    if cfg.enable_round1:
        quad = prefilter.find_extremes(pts)
        flags1 = prefilter.classify_quad(pts, quad)
        survivors = prefilter.compact(pts, flags1)
        if trace is not None:
            trace.round1_input, trace.quad, trace.round1_flags = pts, quad, flags1
    else:
        survivors = pts
    n_r1 = survivors.shape[0]
    t1 = clock()

    buf = angular.annotate(survivors, angular.select_anchor(survivors))
    t2 = clock()
    buf = angular.sort_by_angle(buf)
    t3 = clock()
    if trace is not None:
        trace.sorted_buf = buf

    if cfg.enable_round2 and len(buf) >= 3:
        split = angular.split_regions(buf)
        if cfg.chunked:
            flags2 = discard.discard_chunked(buf, split.l, discard.ChunkConfig(cfg.chunk_count))
        else:
            flags2 = discard.discard_sequential(buf, split.l)
        if tamper is not None:
            tamper(buf, split, flags2)
        if trace is not None:
            trace.split, trace.round2_flags = split, flags2
        buf = discard.stable_compact(buf, flags2)
    n_r2 = len(buf)
    t4 = clock()

    hull = graham_finalize(buf)
    t5 = clock()
    if trace is not None:
        trace.final_buf = buf

    stats = StageStats(
        n_input=n_input,
        n_after_round1=n_r1,
        n_after_round2=n_r2,
        hull_size=len(hull),
        t_round1=_ms(t0, t1),
        t_annotate=_ms(t1, t2),
        t_sort=_ms(t2, t3),
        t_round2=_ms(t3, t4),
        t_finalize=_ms(t4, t5),
        t_total=_ms(t_start, t5),
    )
    return hull, stats


def convex_hull(points, cfg: PipelineConfig | None = None) -> Hull:
    return full_pipeline(points, cfg)[0]
