"""Seeded point generators and point-file readers.

All generators draw from ``numpy.random.default_rng(seed)`` (PCG64), so a
given ``(n, seed)`` always yields the same array with a given numpy version.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import EmptyInputError, ParseError

GENERATED_KINDS = ("square", "disk", "circle", "collinear")
KINDS = GENERATED_KINDS + ("file", "obj")


def gen_square(n: int, seed: int) -> np.ndarray:
    """Uniform on the unit square ``[0, 1)^2``."""
    _check_n(n)
    return np.random.default_rng(seed).random((n, 2))


def gen_disk(n: int, seed: int) -> np.ndarray:
    """Uniform on the closed unit disk, by rejection from ``[-1, 1]^2``."""
    _check_n(n)
    rng = np.random.default_rng(seed)
    out = np.empty((n, 2))
    filled = 0
    while filled < n:
        want = n - filled
        cand = rng.uniform(-1.0, 1.0, size=(int(want / 0.78) + 16, 2))
        cand = cand[cand[:, 0] ** 2 + cand[:, 1] ** 2 <= 1.0][:want]
        out[filled:filled + cand.shape[0]] = cand
        filled += cand.shape[0]
    return out


def _min_angle_gap(n: int) -> float:
    # the sagitta of a gap g is about g**2 / 8; keep it far above the
    # rounding of the coordinates so every point stays a strict hull vertex
    return min(1e-6, math.pi / (4 * n))


def gen_circle(n: int, seed: int) -> np.ndarray:
    """`n` points on the unit circle at distinct random angles.

    Angles closer than a small gap to a neighbour are redrawn.
    """
    if n < 3:
        raise ValueError(f"circle datasets need n >= 3, got {n}")
    rng = np.random.default_rng(seed)
    gap = _min_angle_gap(n)
    theta = rng.uniform(0.0, 2 * math.pi, size=n)
    while True:
        order = np.argsort(theta)
        s = theta[order]
        diffs = np.diff(s, append=s[0] + 2 * math.pi)
        bad = order[diffs < gap]
        if bad.size == 0:
            break
        theta[bad] = rng.uniform(0.0, 2 * math.pi, size=bad.size)
    return np.column_stack((np.cos(theta), np.sin(theta)))


def gen_collinear(n: int, seed: int) -> np.ndarray:
    """Integer points on one line, so every orientation test is exact."""
    _check_n(n)
    rng = np.random.default_rng(seed)
    dx, dy = rng.integers(-5, 6, size=2)
    if dx == 0 and dy == 0:
        dx = 1
    t = rng.integers(-1000, 1001, size=n)
    ox, oy = rng.integers(-1000, 1001, size=2)
    return np.column_stack((ox + dx * t, oy + dy * t)).astype(np.float64)


GENERATORS = {
    "square": gen_square,
    "disk": gen_disk,
    "circle": gen_circle,
    "collinear": gen_collinear,
}


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def _parse_float(tok: str, lineno: int, path) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise ParseError(f"not a number: {tok!r}", lineno, path) from None
    if not math.isfinite(v):
        raise ParseError(f"non-finite coordinate: {tok!r}", lineno, path)
    return v


def load_points(path: str | os.PathLike) -> np.ndarray:
    """Read whitespace-separated ``x y`` lines; blank and ``#`` lines are skipped."""
    rows = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            toks = line.split()
            if len(toks) != 2:
                raise ParseError(f"expected 2 fields, got {len(toks)}", lineno, path)
            rows.append((_parse_float(toks[0], lineno, path), _parse_float(toks[1], lineno, path)))
    if not rows:
        raise EmptyInputError(f"{path}: no points")
    return np.array(rows, dtype=np.float64)


def load_obj_projected(path: str | os.PathLike) -> np.ndarray:
    """Vertices of a Wavefront OBJ file projected onto the XY plane."""
    rows = []
    with open(path, encoding="utf-8", errors="replace") as f:
        for lineno, line in enumerate(f, 1):
            toks = line.split()
            if not toks or toks[0] != "v":
                continue
            if len(toks) < 3:
                raise ParseError("vertex line needs at least x and y", lineno, path)
            rows.append((_parse_float(toks[1], lineno, path), _parse_float(toks[2], lineno, path)))
    if not rows:
        raise EmptyInputError(f"{path}: no vertex lines")
    return np.array(rows, dtype=np.float64)


def save_points(points, path: str | os.PathLike | None = None, stream=None) -> None:
    """Write points in the plain ``x y`` format with round-trip precision."""
    text = "".join(f"{x!r} {y!r}\n" for x, y in np.asarray(points, dtype=np.float64).tolist())
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    else:
        stream.write(text)


@dataclass(frozen=True)
class DatasetSpec:
    kind: str
    n: int = 0
    seed: int = 0
    path: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown dataset kind {self.kind!r}")
        if (self.path is not None) != (self.kind in ("file", "obj")):
            raise ValueError("a path is required for file datasets and only for them")
        if self.kind in GENERATED_KINDS and self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    @property
    def label(self) -> str:
        if self.path is not None:
            return Path(self.path).name
        return self.kind

    def materialize(self) -> np.ndarray:
        if self.kind == "file":
            return load_points(self.path)
        if self.kind == "obj":
            return load_obj_projected(self.path)
        return GENERATORS[self.kind](self.n, self.seed)
