from __future__ import annotations

import logging

import numpy as np
from shapely.geometry import LineString, Point

from ..core.errors import ClearanceError
from ..core.trajectory import Trajectory
from ..helpers.geometry_helper import orthonormal_frame
from ..sources.flux import Source
from ..sources.loop import NEAR_WIRE_EPSILON
from ..sources.torus import TorusGeometry

logger = logging.getLogger(__name__)

SAMPLES_PER_SEGMENT = 256


def excluded_section(source: Source):
    """
    Cross-section the beam must avoid, in the meridional (s, z) half-plane.

    For a toroidal source this is the tube disk; for a single loop the
    near-wire exclusion round the wire.
    """
    if isinstance(source, TorusGeometry):
        return Point(source.major_radius, 0.0).buffer(source.minor_radius, quad_segs=64)
    return Point(source.radius, 0.0).buffer(NEAR_WIRE_EPSILON * source.radius, quad_segs=64)


def meridional_trace(traj: Trajectory, source: Source) -> LineString:
    """The path mapped to (distance from the source axis, height above its plane)."""
    if isinstance(source, TorusGeometry):
        _, _, n = source.frame()
    else:
        _, _, n = orthonormal_frame(source.unit_normal.as_array())
    u = np.linspace(0.0, traj.segment_count, SAMPLES_PER_SEGMENT * traj.segment_count + 1)
    points, _ = traj.points_at(u)
    d = points - source.center.as_array()
    z = d @ n
    s = np.linalg.norm(d - np.outer(z, n), axis=1)
    return LineString(np.column_stack([s, z]))


def check_clearance(traj: Trajectory, source: Source) -> float:
    """
    Distance of the path from the excluded cross-section.

    Raises:
        ClearanceError: the path enters the cross-section.
    """
    section = excluded_section(source)
    trace = meridional_trace(traj, source)
    if trace.intersects(section):
        raise ClearanceError(
            f"trajectory from {traj.start.tolist()} to {traj.end.tolist()} enters the source cross-section"
        )
    clearance = float(trace.distance(section))
    logger.debug("trajectory clearance %.6g", clearance)
    return clearance
