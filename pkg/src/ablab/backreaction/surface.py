"""
Surface side of the Faraday chain: fluxes of the electron's field B_e and
of its rate dB_e/dt through the flat disk a current loop bounds.

Each flux is an independent 2-D quadrature, so the line integrals of
``potentials`` can be checked against it one equality at a time:

    loop_integral(A_e . dl)   = disk_integral(B_e . ds)
    d/dt disk_integral(B_e)   = disk_integral(dB_e/dt . ds)
    loop_integral(E_e . dl)   = -disk_integral(dB_e/dt . ds)
"""

from __future__ import annotations

import logging
from typing import Callable

import numpy as np

from ..core.errors import GeometryError
from ..core.quadrature import QuadratureResult, integrate_disk
from ..core.vectors import Disk, Vec3
from ..phase.electron import ElectronState
from ..sources.loop import CurrentLoop
from .potentials import electron_field_rates, electron_magnetic_fields

logger = logging.getLogger(__name__)

# relative to |q| |v| (times |v| / radius for the rate)
SURFACE_TOLERANCE = 1e-13
# minimum electron distance from the disk, in loop radii
DISK_CLEARANCE = 0.05
FARADAY_STEP = 0.005


def loop_disk(loop: CurrentLoop) -> Disk:
    """Flat disk bounded by the wire, oriented along the loop normal."""
    return Disk(center=loop.center, unit_normal=loop.unit_normal, radius=loop.radius)


def disk_distance(disk: Disk, position) -> float:
    """Distance from ``position`` to the closed disk."""
    offset = Vec3.of(position).as_array() - disk.center.as_array()
    normal = disk.unit_normal.as_array()
    height = float(offset @ normal)
    radial = float(np.linalg.norm(offset - height * normal))
    if radial <= disk.radius:
        return abs(height)
    return float(np.hypot(radial - disk.radius, height))


def _surface_flux(
    loop: CurrentLoop,
    e: ElectronState,
    field: Callable[[ElectronState, np.ndarray], np.ndarray],
    tol: float,
    *,
    rate: bool,
) -> QuadratureResult:
    disk = loop_disk(loop)
    clearance = disk_distance(disk, e.position)
    if clearance < DISK_CLEARANCE * loop.radius:
        raise GeometryError(
            f"electron at {e.position.as_array().tolist()} is {clearance:.3e} from the loop disk; "
            f"the surface route needs at least {DISK_CLEARANCE:g} loop radii"
        )
    normal = disk.unit_normal.as_array()
    offset = e.position.as_array() - disk.center.as_array()
    foot = float(np.linalg.norm(offset - (offset @ normal) * normal))

    def integrand(r: np.ndarray, theta: np.ndarray) -> np.ndarray:
        points = disk.surface_points(r, theta)
        shape = points.shape[:-1]
        return (field(e, points.reshape(-1, 3)) @ normal).reshape(shape)

    speed = e.velocity.norm()
    scale = max(abs(e.charge) * speed * (speed / loop.radius if rate else 1.0), 1e-300)
    breakpoints = (foot,) if 0.0 < foot < disk.radius else ()
    return integrate_disk(integrand, disk.radius, tol * scale, breakpoints=breakpoints)


def electron_disk_flux(loop: CurrentLoop, e: ElectronState, tol: float = SURFACE_TOLERANCE) -> QuadratureResult:
    """
    Flux of B_e through the loop disk.

    Raises:
        GeometryError: the electron is closer than 0.05 loop radii to the disk.
    """
    return _surface_flux(loop, e, electron_magnetic_fields, tol, rate=False)


def electron_disk_flux_rate(loop: CurrentLoop, e: ElectronState, tol: float = SURFACE_TOLERANCE) -> QuadratureResult:
    """Flux of dB_e/dt through the loop disk (same clearance rule)."""
    return _surface_flux(loop, e, electron_field_rates, tol, rate=True)


def flux_time_derivative(
    loop: CurrentLoop,
    e: ElectronState,
    step: float | None = None,
    tol: float = SURFACE_TOLERANCE,
) -> float:
    """
    d/dt of ``electron_disk_flux`` by the five-point central difference.

    The electron is moved along its velocity by +-step and +-2 step in
    time. The default step moves it ``FARADAY_STEP`` times its distance
    from the disk.
    """
    speed = e.velocity.norm()
    if speed == 0.0:
        return 0.0
    if step is None:
        step = FARADAY_STEP * disk_distance(loop_disk(loop), e.position) / speed
    x = e.position.as_array()
    v = e.velocity.as_array()

    def flux(k: int) -> float:
        moved = ElectronState(position=Vec3.of(x + k * step * v), velocity=e.velocity, charge=e.charge)
        return electron_disk_flux(loop, moved, tol).value

    rate = (flux(-2) - 8.0 * flux(-1) + 8.0 * flux(1) - flux(2)) / (12.0 * step)
    logger.debug("flux rate by differences %.15g (step %.3g)", rate, step)
    return rate
