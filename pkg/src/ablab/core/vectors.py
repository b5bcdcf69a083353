from __future__ import annotations

from typing import Iterable

import numpy as np
from pydantic import Field, FiniteFloat

from ..helpers.geometry_helper import orthonormal_frame
from .base import DomainModel


class Vec3(DomainModel):
    """
    Cartesian vector in natural length units (loop radius = 1).

    ### Examples
    ```python
    Vec3(x=1.0, y=0.0, z=2.0)
    Vec3.of((1.0, 0.0, 2.0))
    Vec3.of(np.array([1.0, 0.0, 2.0])).norm()
    ```
    """

    x: FiniteFloat = 0.0
    y: FiniteFloat = 0.0
    z: FiniteFloat = 0.0

    @classmethod
    def of(cls, value: "Vec3 | Iterable[float] | np.ndarray") -> "Vec3":
        """Coerce a Vec3, a length-3 sequence or array into a Vec3."""
        if isinstance(value, Vec3):
            return value
        x, y, z = (float(c) for c in np.asarray(value, dtype=float).reshape(3))
        return cls(x=x, y=y, z=z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def dot(self, other: "Vec3") -> float:
        return float(np.dot(self.as_array(), Vec3.of(other).as_array()))

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3.of(np.cross(self.as_array(), Vec3.of(other).as_array()))

    def normalized(self) -> "Vec3":
        return Vec3.of(self.as_array() / self.norm())

    def rotated(self, rotation: np.ndarray, about: "Vec3 | None" = None) -> "Vec3":
        """Apply a rotation matrix, optionally about a pivot point."""
        pivot = np.zeros(3) if about is None else Vec3.of(about).as_array()
        return Vec3.of(rotation @ (self.as_array() - pivot) + pivot)

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3.of(self.as_array() + Vec3.of(other).as_array())

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3.of(self.as_array() - Vec3.of(other).as_array())

    def __mul__(self, scale: float) -> "Vec3":
        return Vec3.of(self.as_array() * float(scale))

    __rmul__ = __mul__

    def __neg__(self) -> "Vec3":
        return Vec3.of(-self.as_array())

    def __iter__(self):
        return iter((self.x, self.y, self.z))


def as_points(values) -> np.ndarray:
    """Stack a Vec3, an (3,) or (n, 3) array-like into an (n, 3) float array."""
    if isinstance(values, Vec3):
        return values.as_array()[None, :]
    if isinstance(values, (list, tuple)) and values and isinstance(values[0], Vec3):
        return np.array([v.as_array() for v in values], dtype=float)
    points = np.asarray(values, dtype=float)
    return points.reshape(-1, 3)


class Disk(DomainModel):
    """
    Flat disk used as the spanning surface of planar circular contours.

    ### Parameters
    center : Vec3
        Disk center.
    unit_normal : Vec3
        Orientation; the rim is traversed right-handed about it.
    radius : float
        Strictly positive radius.
    """

    center: Vec3
    unit_normal: Vec3
    radius: FiniteFloat = Field(..., gt=0.0, description="Disk radius")

    def frame(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return orthonormal_frame(self.unit_normal.as_array())

    def rim_points(self, theta: np.ndarray) -> np.ndarray:
        """Rim positions at angles ``theta``; shape (len(theta), 3)."""
        u, v, _ = self.frame()
        theta = np.asarray(theta, dtype=float)[:, None]
        return self.center.as_array() + self.radius * (np.cos(theta) * u + np.sin(theta) * v)

    def rim_tangents(self, theta: np.ndarray) -> np.ndarray:
        """d(rim)/d(theta) at angles ``theta``."""
        u, v, _ = self.frame()
        theta = np.asarray(theta, dtype=float)[:, None]
        return self.radius * (-np.sin(theta) * u + np.cos(theta) * v)

    def surface_points(self, r: np.ndarray, theta: np.ndarray) -> np.ndarray:
        """Points at polar coordinates (r, theta) in the disk plane (broadcast)."""
        u, v, _ = self.frame()
        r = np.asarray(r, dtype=float)[..., None]
        theta = np.asarray(theta, dtype=float)[..., None]
        return self.center.as_array() + r * (np.cos(theta) * u + np.sin(theta) * v)

    def rotated(self, rotation: np.ndarray, about: Vec3 | None = None) -> "Disk":
        return Disk(
            center=self.center.rotated(rotation, about),
            unit_normal=Vec3.of(rotation @ self.unit_normal.as_array()),
            radius=self.radius,
        )
