"""
Linking of closed electron contours with a flux ring.

``linking_number`` counts signed crossings of the contour through the flat
disk spanning the ring: +1 for a crossing along the disk normal. Vertices
lying exactly in the disk plane count as being on the positive side, so a
contour that touches the plane without passing through it contributes
nothing. ``gauss_linking_integral`` evaluates the Gauss double integral of
two closed polylines and is kept as an independent check.
"""

from __future__ import annotations

import numpy as np

from .errors import AmbiguousTopologyError, GeometryError
from .trajectory import Trajectory
from .vectors import Disk

RIM_TOLERANCE = 1e-9


def linking_number(path: Trajectory, ring: Disk) -> int:
    """
    Signed number of times the closed ``path`` threads ``ring``.

    Raises:
        GeometryError: the path is not closed.
        AmbiguousTopologyError: a crossing lies within 1e-9 of the ring circle.
    """
    if not path.closed:
        raise GeometryError("linking_number needs a closed path")

    center = ring.center.as_array()
    normal = ring.unit_normal.as_array()
    x = path.positions
    height = (x - center) @ normal
    above = height >= 0.0

    upward = ~above[:-1] & above[1:]
    downward = above[:-1] & ~above[1:]
    crossing = upward | downward
    if not crossing.any():
        return 0

    h0, h1 = height[:-1][crossing], height[1:][crossing]
    p0, p1 = x[:-1][crossing], x[1:][crossing]
    s = h0 / (h0 - h1)
    hits = p0 + s[:, None] * (p1 - p0)
    radial = hits - center - np.outer((hits - center) @ normal, normal)
    distance = np.linalg.norm(radial, axis=1)

    near_rim = np.abs(distance - ring.radius) <= RIM_TOLERANCE
    if near_rim.any():
        raise AmbiguousTopologyError(
            f"path crosses the ring plane {abs(distance[near_rim][0] - ring.radius):.2e} from the ring; perturb the path"
        )

    inside = distance < ring.radius
    sign = np.where(upward[crossing], 1, -1)
    return int(sign[inside].sum())


def _closed_polyline(curve) -> np.ndarray:
    points = curve.positions if isinstance(curve, Trajectory) else np.asarray(curve, dtype=float)
    if np.linalg.norm(points[-1] - points[0]) > 0.0:
        points = np.vstack([points, points[:1]])
    return points


def gauss_linking_integral(curve_a, curve_b) -> float:
    """
    Gauss linking integral of two closed polylines (Trajectory or (n, 3) arrays).

    Uses the exact solid-angle contribution of every pair of straight
    segments, so the result is an integer up to roundoff for disjoint
    curves.
    """
    ls = _closed_polyline(curve_a)
    ks = _closed_polyline(curve_b)

    # segment j of ls against segment i of ks, broadcast as (i, j, 3)
    a = ls[None, :-1, :] - ks[:-1, None, :]
    b = ls[None, :-1, :] - ks[1:, None, :]
    c = ls[None, 1:, :] - ks[1:, None, :]
    d = ls[None, 1:, :] - ks[:-1, None, :]

    def dot(u, v):
        return np.einsum("...k,...k->...", u, v)

    p = dot(a, np.cross(b, c))
    an, bn, cn, dn = (np.linalg.norm(v, axis=-1) for v in (a, b, c, d))
    d1 = an * bn * cn + dot(a, b) * cn + dot(b, c) * an + dot(c, a) * bn
    d2 = an * dn * cn + dot(a, d) * cn + dot(d, c) * an + dot(c, a) * dn
    total = np.arctan2(p, d1).sum() + np.arctan2(p, d2).sum()
    return float(total / (2.0 * np.pi))
