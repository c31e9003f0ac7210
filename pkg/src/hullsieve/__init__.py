"""Planar convex hulls with interior-point discarding ahead of a Graham scan."""

from .errors import HullError
from .geom import Point2, Turn, orient, polar_key
from .hull import Hull, PipelineConfig, PipelineTrace, StageStats, convex_hull, full_pipeline
from .oracle import brute_force_hull, monotone_chain

__all__ = [
    "Hull", "HullError", "PipelineConfig", "PipelineTrace", "Point2", "StageStats", "Turn",
    "brute_force_hull", "convex_hull", "full_pipeline", "monotone_chain", "orient", "polar_key",
]
