"""
Beam layout of the two-subbeam experiment.

The electron source and the screen point are fixed by ``BeamGeometry``;
the slits lie in the plane of the magnetic source, on the ray along its
reference direction. The threading slit sits midway across the hole, the
outer slits follow at multiples of ``slit_separation``.
"""

from __future__ import annotations

from typing import Literal

import numpy as np
from pydantic import Field, FiniteFloat

from ..core.base import DomainModel
from ..core.trajectory import DEFAULT_SPEED, Trajectory
from ..core.vectors import Vec3
from ..helpers.geometry_helper import orthonormal_frame
from ..sources.flux import Source
from ..sources.torus import TorusGeometry
from .clearance import check_clearance

Pairing = Literal["same-set", "cross-set"]

DEFAULT_FRINGE_COUNT = 4


class BeamGeometry(DomainModel):
    """
    ### Parameters
    source_point : Vec3
        Common start of both subbeams.
    screen_origin : Vec3
        Screen point x = 0, where both subbeams end.
    screen_normal, screen_axis : Vec3
        Screen plane orientation and the in-plane direction of x.
    slit_separation : float
        Distance between neighbouring slits (> 0).
    phase_gradient : float
        Geometric fringe frequency g in radians per screen length (> 0).
    fringe_count : int
        Number of fringe periods covered by a sampled pattern.
    speed : float
        Electron speed along the chords (units of c).
    """

    source_point: Vec3 = Field(default_factory=lambda: Vec3(z=-4.0))
    screen_origin: Vec3 = Field(default_factory=lambda: Vec3(z=4.0))
    screen_normal: Vec3 = Field(default_factory=lambda: Vec3(z=1.0))
    screen_axis: Vec3 = Field(default_factory=lambda: Vec3(x=1.0))
    slit_separation: FiniteFloat = 1.2
    phase_gradient: FiniteFloat = 2.0 * np.pi
    fringe_count: int = DEFAULT_FRINGE_COUNT
    speed: FiniteFloat = Field(DEFAULT_SPEED, gt=0.0, lt=1.0)

    @property
    def fringe_period(self) -> float:
        return 2.0 * np.pi / self.phase_gradient


def _source_layout(source: Source) -> tuple[np.ndarray, np.ndarray, float, float]:
    """Centre, in-plane reference direction, core radius and excluded tube radius."""
    if isinstance(source, TorusGeometry):
        u, _, _ = source.frame()
        return source.center.as_array(), u, source.major_radius, source.minor_radius
    u, _, _ = orthonormal_frame(source.unit_normal.as_array())
    return source.center.as_array(), u, source.radius, 0.0


def slit_points(geom: BeamGeometry, source: Source, pairing: Pairing) -> tuple[np.ndarray, np.ndarray]:
    center, u, core, tube = _source_layout(source)
    threading = 0.5 * (core - tube)
    if pairing == "cross-set":
        radii = (threading, threading + geom.slit_separation)
    elif pairing == "same-set":
        radii = (threading + geom.slit_separation, threading + 2.0 * geom.slit_separation)
    else:
        raise ValueError(f"pairing must be 'same-set' or 'cross-set', got {pairing!r}")
    return center + radii[0] * u, center + radii[1] * u


def canonical_pair(
    geom: BeamGeometry,
    source: Source,
    pairing: Pairing = "cross-set",
    swap: bool = False,
) -> tuple[Trajectory, Trajectory]:
    """
    Straight chords source point -> slit -> screen origin for both subbeams.

    With ``cross-set`` pairing l1 threads the hole and l2 passes outside;
    ``swap`` exchanges them.

    Raises:
        ClearanceError: a chord enters the source's excluded cross-section.
    """
    first, second = slit_points(geom, source, pairing)
    start = geom.source_point.as_array()
    end = geom.screen_origin.as_array()
    l1 = Trajectory.polyline([start, first, end], speed=geom.speed)
    l2 = Trajectory.polyline([start, second, end], speed=geom.speed)
    for traj in (l1, l2):
        check_clearance(traj, source)
    return (l2, l1) if swap else (l1, l2)
