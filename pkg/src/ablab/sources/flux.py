"""
Flux, circulation and field sampling for any source exposing ``arrays()``.
"""

from __future__ import annotations

import logging
from typing import Sequence, Union

import numpy as np

from ..core.base import DomainModel
from ..core.errors import GeometryError
from ..core.quadrature import QuadratureResult, integrate_disk
from ..core.vectors import Disk, Vec3, as_points
from .coil import ToroidalCoil
from .loop import NEAR_WIRE_EPSILON, CurrentLoop, evaluate_loops, rim_circulation, wire_clearance
from .ring import InertFluxRing
from .torus import TorusGeometry

logger = logging.getLogger(__name__)

Source = Union[CurrentLoop, ToroidalCoil, InertFluxRing]

FLUX_TOLERANCE = 1e-10
CIRCULATION_TOLERANCE = 1e-12


class FieldSample(DomainModel):
    point: Vec3
    vector_potential: Vec3
    magnetic_field: Vec3


def vector_potential(source: Source, points, *, near_wire_epsilon: float = NEAR_WIRE_EPSILON) -> np.ndarray:
    """A at ``points``; shape (n, 3)."""
    potential, _ = evaluate_loops(source.arrays(), points, want_field=False, near_wire_epsilon=near_wire_epsilon)
    return potential


def magnetic_field(source: Source, points, *, near_wire_epsilon: float = NEAR_WIRE_EPSILON) -> np.ndarray:
    """B at ``points``; shape (n, 3)."""
    _, field = evaluate_loops(source.arrays(), points, near_wire_epsilon=near_wire_epsilon)
    return field


def _radial_breakpoints(source: Source, disk: Disk) -> list[float]:
    if isinstance(source, TorusGeometry):
        offset = float(source.tube_distance(disk.center.as_array())[0])
        if offset <= 1e-12 * source.major_radius and source.minor_radius < disk.radius:
            return [source.minor_radius]
    return []


def flux_through_disk(source: Source, disk: Disk, tol: float = FLUX_TOLERANCE) -> QuadratureResult:
    """Surface integral of B . n over ``disk`` (radial Gauss panels x periodic angular rule)."""
    normal = disk.unit_normal.as_array()
    arrays = source.arrays()

    def integrand(r: np.ndarray, theta: np.ndarray) -> np.ndarray:
        points = disk.surface_points(r, theta)
        shape = points.shape[:-1]
        _, field = evaluate_loops(arrays, points.reshape(-1, 3))
        return (field @ normal).reshape(shape)

    result = integrate_disk(integrand, disk.radius, tol, breakpoints=_radial_breakpoints(source, disk))
    logger.debug("flux through disk r=%g: %.15g (error %.2e)", disk.radius, result.value, result.error)
    return result


def disk_circulation(source: Source, disk: Disk, tol: float = CIRCULATION_TOLERANCE) -> QuadratureResult:
    """Circulation of A on the exact rim of ``disk``, right-handed about its normal."""
    return rim_circulation(source.arrays(), disk, tol)


def meridional_disk(source: TorusGeometry, radius: float | None = None) -> Disk:
    return source.meridional_disk(radius)


def diagnostic_disk(source: Source) -> Disk:
    """
    Default disk for flux and Stokes diagnostics.

    Toroidal sources use the meridional disk; a single loop uses a coaxial
    disk of twice its radius lifted one radius along the axis (a disk in
    the loop plane would cut the wire).
    """
    if isinstance(source, TorusGeometry):
        return source.meridional_disk()
    normal = source.unit_normal.as_array()
    return Disk(
        center=Vec3.of(source.center.as_array() + source.radius * normal),
        unit_normal=source.unit_normal,
        radius=2.0 * source.radius,
    )


def threaded_flux(source: Source, tol: float = CIRCULATION_TOLERANCE) -> float:
    """
    Flux confined in a toroidal source.

    The inert ring carries ``total_flux`` by definition; a coil's is the
    circulation round its meridional disk rim.

    Raises:
        GeometryError: the source is a single loop, which confines no flux.
    """
    if isinstance(source, InertFluxRing):
        return source.total_flux
    if isinstance(source, ToroidalCoil):
        return disk_circulation(source, source.meridional_disk(), tol).value
    raise GeometryError(f"{type(source).__name__} has no confined flux")


def lattice(shape: Sequence[int], extent: float, center=None) -> np.ndarray:
    """
    Regular (nx, ny, nz) grid over [-extent, extent]^3 around ``center``.

    An axis with a single node sits at the centre. Points are ordered with
    x slowest and z fastest.
    """
    counts = [int(n) for n in shape]
    if len(counts) != 3 or any(n < 0 for n in counts):
        raise ValueError(f"grid shape must be three non-negative integers, got {shape}")
    if int(np.prod(counts)) == 0:
        raise ValueError(f"grid {'x'.join(map(str, counts))} contains no points")
    if not extent > 0:
        raise ValueError(f"grid extent must be positive, got {extent}")
    axes = [np.linspace(-extent, extent, n) if n > 1 else np.zeros(1) for n in counts]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)
    origin = np.zeros(3) if center is None else Vec3.of(center).as_array()
    return grid + origin


def sample_field_grid(
    source: Source,
    points,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> list[FieldSample]:
    """A and B at ``points``; points inside the near-wire exclusion are skipped with a warning."""
    pts = as_points(points)
    clearance, nearest = wire_clearance(source.arrays(), pts)
    keep = clearance > near_wire_epsilon
    skipped = int((~keep).sum())
    if skipped:
        first = int(np.argmax(~keep))
        logger.warning(
            "skipped %d grid point(s) inside the near-wire exclusion (first: %s, loop %d)",
            skipped,
            pts[first].tolist(),
            int(nearest[first]),
        )
    kept = pts[keep]
    potential, field = evaluate_loops(source.arrays(), kept, near_wire_epsilon=near_wire_epsilon)
    return [
        FieldSample(point=Vec3.of(p), vector_potential=Vec3.of(a), magnetic_field=Vec3.of(b))
        for p, a, b in zip(kept, potential, field)
    ]
