"""
Single circular current loop: closed-form potentials and the
Biot-Savart quadrature they are checked against.

Closed forms use the cylindrical coordinates (rho, z) of the field point
about the loop axis, with D = (a + rho)^2 + z^2 and m = 4 a rho / D:

    A   = 32 I a^2 G(m) / D^(3/2)    (n x rho_vec)
    B_z = 2 I / sqrt(D) [K + (a^2 - rho^2 - z^2) / ((a - rho)^2 + z^2) E]
    B_r = 32 I a^2 z H(m) / D^(5/2)  rho_vec

G and H are the m^2-scaled combinations of K and E that stay finite on
the axis; below m = 0.1 they come from their power series.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
from pydantic import Field, FiniteFloat

from ..core.base import DomainModel
from ..core.elliptic import complete_elliptic_unchecked
from ..core.errors import NearWireError
from ..core.quadrature import DEFAULT_TOLERANCE, QuadratureResult, integrate_1d, integrate_periodic
from ..core.vectors import Disk, Vec3, as_points
from ..helpers.geometry_helper import orthonormal_frame
from ..parallel import chunk_slices, ordered_map

NEAR_WIRE_EPSILON = 1e-6
SERIES_CUTOFF = 0.1
REFERENCE_TOLERANCE = 1e-12
# point x loop pairs per evaluation chunk
CHUNK_PAIRS = 200_000


def _series_coefficients(terms: int = 26) -> tuple[np.ndarray, np.ndarray]:
    """Power-series coefficients of G(m) and H(m) from those of K and E."""
    n = np.arange(terms + 2)
    ratio = np.ones(terms + 2)
    ratio[1:] = np.cumprod((2.0 * n[1:] - 1.0) / (2.0 * n[1:]))
    k = ratio**2
    e = k / (1.0 - 2.0 * n)
    half_pi = 0.5 * np.pi

    g = half_pi * (k[2:] - 0.5 * k[1:-1] - e[2:])
    partial = np.concatenate([[0.0], np.cumsum(e)[:-1]])
    h_full = half_pi * (-k + e + 0.5 * partial)
    return g, h_full[2:]


_G_SERIES, _H_SERIES = _series_coefficients()


def loop_kernels(m: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """K(m), E(m), G(m) and H(m) for an array of parameters in [0, 1)."""
    m = np.asarray(m, dtype=float)
    k, e = complete_elliptic_unchecked(m)
    g = np.empty_like(m)
    h = np.empty_like(m)

    small = m < SERIES_CUTOFF
    ms = m[small]
    g[small] = np.polynomial.polynomial.polyval(ms, _G_SERIES)
    h[small] = np.polynomial.polynomial.polyval(ms, _H_SERIES)

    big = ~small
    mb, kb, eb = m[big], k[big], e[big]
    g[big] = ((1.0 - 0.5 * mb) * kb - eb) / (mb * mb)
    h[big] = (-kb + (2.0 - mb) / (2.0 * (1.0 - mb)) * eb) / (mb * mb)
    return k, e, g, h


class LoopArrays(NamedTuple):
    """Stacked geometry of one or more circular loops."""

    centers: np.ndarray
    normals: np.ndarray
    radii: np.ndarray
    currents: np.ndarray

    @property
    def count(self) -> int:
        return len(self.radii)


def _kernel(
    loops: LoopArrays,
    points: np.ndarray,
    want_field: bool,
    near_wire_epsilon: float,
) -> tuple[np.ndarray, np.ndarray | None]:
    d = points[:, None, :] - loops.centers[None, :, :]
    z = np.einsum("mnk,nk->mn", d, loops.normals)
    rho_vec = d - z[..., None] * loops.normals[None, :, :]
    rho = np.linalg.norm(rho_vec, axis=-1)
    a = loops.radii[None, :]
    current = loops.currents[None, :]

    alpha2 = (a - rho) ** 2 + z**2
    wire_distance = np.sqrt(alpha2)
    too_close = wire_distance <= near_wire_epsilon * a
    if too_close.any():
        point_index, loop_index = np.argwhere(too_close)[0]
        distance = float(wire_distance[point_index, loop_index])
        raise NearWireError(
            f"point {points[point_index].tolist()} is {distance:.3e} from the wire of loop {loop_index} "
            f"(exclusion {near_wire_epsilon:g} x radius)",
            loop_index=int(loop_index),
            distance=distance,
        )

    big_d = (a + rho) ** 2 + z**2
    m = 4.0 * a * rho / big_d
    k, e, g, h = loop_kernels(m)

    scale_a = 32.0 * current * a * a * g / big_d**1.5
    potential = np.einsum("mn,mnk->mk", scale_a, np.cross(loops.normals[None, :, :], rho_vec))
    if not want_field:
        return potential, None

    b_axial = 2.0 * current / np.sqrt(big_d) * (k + (a * a - rho * rho - z * z) / alpha2 * e)
    b_radial = 32.0 * current * a * a * z * h / big_d**2.5
    field = np.einsum("mn,nk->mk", b_axial, loops.normals) + np.einsum("mn,mnk->mk", b_radial, rho_vec)
    return potential, field


def evaluate_loops(
    loops: LoopArrays,
    points,
    *,
    want_field: bool = True,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> tuple[np.ndarray, np.ndarray | None]:
    """
    Superposed closed-form A (and B) of ``loops`` at ``points`` (n, 3).

    Points are processed in chunks through ``ordered_map``; per point the
    sum over loops always runs in loop-index order.
    """
    pts = as_points(points)
    size = max(1, CHUNK_PAIRS // max(loops.count, 1))

    def run(block: slice):
        return _kernel(loops, pts[block], want_field, near_wire_epsilon)

    parts = ordered_map(run, chunk_slices(len(pts), size))
    if not parts:
        empty = np.zeros((0, 3))
        return empty, (empty if want_field else None)
    potential = np.vstack([p for p, _ in parts])
    field = np.vstack([f for _, f in parts]) if want_field else None
    return potential, field


class CurrentLoop(DomainModel):
    """
    Circular filament carrying ``current`` = rho * v, right-handed about
    ``unit_normal``.
    """

    center: Vec3 = Field(default_factory=Vec3)
    unit_normal: Vec3 = Field(default_factory=lambda: Vec3(z=1.0))
    radius: FiniteFloat = Field(1.0, gt=0.0, description="Loop radius")
    current: FiniteFloat = 1.0

    def arrays(self) -> LoopArrays:
        return LoopArrays(
            centers=self.center.as_array()[None, :],
            normals=self.unit_normal.as_array()[None, :],
            radii=np.array([self.radius]),
            currents=np.array([self.current]),
        )

    def wire_points(self, theta: np.ndarray) -> np.ndarray:
        u, v, _ = orthonormal_frame(self.unit_normal.as_array())
        theta = np.asarray(theta, dtype=float)[..., None]
        return self.center.as_array() + self.radius * (np.cos(theta) * u + np.sin(theta) * v)

    def wire_tangents(self, theta: np.ndarray) -> np.ndarray:
        """d(wire)/d(theta); magnitude equals the radius."""
        u, v, _ = orthonormal_frame(self.unit_normal.as_array())
        theta = np.asarray(theta, dtype=float)[..., None]
        return self.radius * (-np.sin(theta) * u + np.cos(theta) * v)

    def scaled(self, factor: float) -> "CurrentLoop":
        return self.model_copy(update={"current": self.current * factor})

    def rotated(self, rotation: np.ndarray, about: Vec3 | None = None) -> "CurrentLoop":
        return self.model_copy(
            update={
                "center": self.center.rotated(rotation, about),
                "unit_normal": Vec3.of(rotation @ self.unit_normal.as_array()),
            }
        )


def loop_vector_potential(loop: CurrentLoop, point, *, near_wire_epsilon: float = NEAR_WIRE_EPSILON) -> Vec3:
    potential, _ = evaluate_loops(loop.arrays(), point, want_field=False, near_wire_epsilon=near_wire_epsilon)
    return Vec3.of(potential[0])


def loop_magnetic_field(loop: CurrentLoop, point, *, near_wire_epsilon: float = NEAR_WIRE_EPSILON) -> Vec3:
    _, field = evaluate_loops(loop.arrays(), point, near_wire_epsilon=near_wire_epsilon)
    return Vec3.of(field[0])


def biot_savart_reference(
    loop: CurrentLoop,
    point,
    tol: float = REFERENCE_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> tuple[Vec3, Vec3]:
    """
    A = I * loop_integral(dl / r) and B = I * loop_integral(dl x r_hat / r^2)
    by adaptive quadrature over the wire angle.

    The angle of the wire point nearest to ``point`` is a breakpoint, which
    keeps the panels fine where the integrand peaks.
    """
    p = Vec3.of(point).as_array()
    u, v, n = orthonormal_frame(loop.unit_normal.as_array())
    d = p - loop.center.as_array()
    z = float(d @ n)
    rho = float(np.hypot(d @ u, d @ v))
    distance = float(np.hypot(rho - loop.radius, z))
    if distance <= near_wire_epsilon * loop.radius:
        raise NearWireError(
            f"point {p.tolist()} is {distance:.3e} from the wire (exclusion {near_wire_epsilon:g} x radius)",
            loop_index=0,
            distance=distance,
        )

    def integrand(theta: np.ndarray) -> np.ndarray:
        dl = loop.wire_tangents(theta)
        r = p - loop.wire_points(theta)
        inv = 1.0 / np.linalg.norm(r, axis=1)
        return np.hstack([dl * inv[:, None], np.cross(dl, r) * (inv**3)[:, None]])

    nearest = float(np.arctan2(d @ v, d @ u)) % (2.0 * np.pi)
    result = integrate_1d(
        integrand,
        0.0,
        2.0 * np.pi,
        tol,
        breakpoints=(0.5 * np.pi, np.pi, 1.5 * np.pi, nearest),
    )
    values = loop.current * np.asarray(result.value)
    return Vec3.of(values[:3]), Vec3.of(values[3:])


def rim_circulation(
    loops: LoopArrays,
    disk: Disk,
    tol: float = DEFAULT_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> QuadratureResult:
    """Circulation of the superposed loop potential round the exact rim of ``disk``."""

    def integrand(theta: np.ndarray) -> np.ndarray:
        potential, _ = evaluate_loops(
            loops, disk.rim_points(theta), want_field=False, near_wire_epsilon=near_wire_epsilon
        )
        return np.einsum("nk,nk->n", potential, disk.rim_tangents(theta))

    return integrate_periodic(integrand, tol)


def wire_clearance(loops: LoopArrays, points) -> tuple[np.ndarray, np.ndarray]:
    """For each point: distance to the nearest wire over that wire's radius, and the loop index."""
    pts = as_points(points)
    d = pts[:, None, :] - loops.centers[None, :, :]
    z = np.einsum("mnk,nk->mn", d, loops.normals)
    rho = np.linalg.norm(d - z[..., None] * loops.normals[None, :, :], axis=-1)
    ratio = np.hypot(rho - loops.radii[None, :], z) / loops.radii[None, :]
    nearest = np.argmin(ratio, axis=1)
    return ratio[np.arange(len(pts)), nearest], nearest
