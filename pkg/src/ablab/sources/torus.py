from __future__ import annotations

from typing import Optional

import numpy as np
from pydantic import Field, FiniteFloat

from ..core.base import DomainModel
from ..core.vectors import Disk, Vec3
from ..helpers.geometry_helper import orthonormal_frame

DEFAULT_LOOP_COUNT = 360


class TorusGeometry(DomainModel):
    """
    Shared geometry of toroidal sources.

    The torus is centred on ``center`` with symmetry ``axis``; the core
    circle has radius ``major_radius`` and the tube radius is
    ``minor_radius``. Azimuth 0 lies along ``reference_direction`` (or an
    arbitrary fixed direction perpendicular to the axis when omitted).
    """

    major_radius: FiniteFloat = Field(..., gt=0.0)
    minor_radius: FiniteFloat = Field(..., gt=0.0)
    loop_count: int = DEFAULT_LOOP_COUNT
    axis: Vec3 = Field(default_factory=lambda: Vec3(z=1.0))
    center: Vec3 = Field(default_factory=Vec3)
    reference_direction: Optional[Vec3] = None

    def frame(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        reference = None if self.reference_direction is None else self.reference_direction.as_array()
        return orthonormal_frame(self.axis.as_array(), reference)

    def loop_angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.loop_count) / self.loop_count

    def radial_direction(self, phi) -> np.ndarray:
        u, v, _ = self.frame()
        phi = np.asarray(phi, dtype=float)[..., None]
        return np.cos(phi) * u + np.sin(phi) * v

    def azimuthal_direction(self, phi) -> np.ndarray:
        u, v, _ = self.frame()
        phi = np.asarray(phi, dtype=float)[..., None]
        return -np.sin(phi) * u + np.cos(phi) * v

    def core_disk(self) -> Disk:
        """Flat disk spanning the core circle; its normal is the axis."""
        _, _, n = self.frame()
        return Disk(center=self.center, unit_normal=Vec3.of(n), radius=self.major_radius)

    def meridional_disk(self, radius: float | None = None) -> Disk:
        """
        Disk in the meridional half-plane midway between loops 0 and 1,
        centred on the tube and oriented along the azimuthal direction.

        The default radius ``a + min(a, (R - a) / 2)`` encloses the tube
        without reaching the axis.
        """
        a, big_r = self.minor_radius, self.major_radius
        if radius is None:
            radius = a + min(a, 0.5 * (big_r - a))
        phi = np.pi / self.loop_count
        center = self.center.as_array() + big_r * self.radial_direction(phi)
        return Disk(center=Vec3.of(center), unit_normal=Vec3.of(self.azimuthal_direction(phi)), radius=radius)

    def tube_distance(self, points) -> np.ndarray:
        """Distance of each point from the core circle (0 on the core, ``minor_radius`` on the tube)."""
        _, _, n = self.frame()
        d = np.asarray(points, dtype=float).reshape(-1, 3) - self.center.as_array()
        z = d @ n
        s = np.linalg.norm(d - z[:, None] * n, axis=1)
        return np.hypot(s - self.major_radius, z)

    def _rotated_update(self, rotation: np.ndarray, about: Vec3 | None) -> dict:
        u, _, _ = self.frame()
        return {
            "center": self.center.rotated(rotation, about),
            "axis": Vec3.of(rotation @ self.axis.as_array()),
            "reference_direction": Vec3.of(rotation @ u),
        }

    def rotated(self, rotation: np.ndarray, about: Vec3 | None = None):
        """Copy rotated about ``about`` (default: origin); loop k keeps its place on the rotated torus."""
        return self.model_copy(update=self._rotated_update(rotation, about))
