"""
Phase accumulated along electron trajectories.

One trajectory contributes ``-charge * integral(A . dx)``; a pair sharing
its endpoints closes into a contour whose phase difference is compared
with ``-charge * linking * flux`` for sources that confine their flux.
"""

from __future__ import annotations

import logging

import numpy as np

from ..core.errors import ContourMismatchError, EndpointMismatchError, GeometryError
from ..core.quadrature import DEFAULT_TOLERANCE, QuadratureResult, integrate_1d
from ..core.topology import linking_number
from ..core.trajectory import ENDPOINT_TOLERANCE, Trajectory
from ..core.vectors import Disk
from ..sources.flux import Source, disk_circulation, flux_through_disk, threaded_flux
from ..sources.loop import NEAR_WIRE_EPSILON, evaluate_loops
from ..sources.ring import InertFluxRing
from ..sources.torus import TorusGeometry
from .electron import ELECTRON_CHARGE
from .result import PhaseResult

logger = logging.getLogger(__name__)

RIM_TOLERANCE = 1e-9


def circulation(
    traj: Trajectory,
    source: Source,
    tol: float = DEFAULT_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> QuadratureResult:
    """
    Line integral of A along the polyline of ``traj`` (no charge factor).

    The path parameter runs over [0, segment_count] with a breakpoint at
    every sample, so no panel straddles a corner. Velocities are ignored.
    """
    arrays = source.arrays()

    def integrand(u: np.ndarray) -> np.ndarray:
        points, tangents = traj.points_at(u)
        potential, _ = evaluate_loops(arrays, points, want_field=False, near_wire_epsilon=near_wire_epsilon)
        return np.einsum("nk,nk->n", potential, tangents)

    segments = traj.segment_count
    return integrate_1d(integrand, 0.0, float(segments), tol, breakpoints=range(1, segments))


def path_phase(
    traj: Trajectory,
    source: Source,
    charge: float = ELECTRON_CHARGE,
    tol: float = DEFAULT_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> float:
    """-charge * integral(A . dx) along ``traj``."""
    return -charge * circulation(traj, source, tol, near_wire_epsilon=near_wire_epsilon).value


def check_shared_endpoints(l1: Trajectory, l2: Trajectory, tolerance: float = ENDPOINT_TOLERANCE) -> None:
    for label, a, b in (("start", l1.start, l2.start), ("end", l1.end, l2.end)):
        gap = float(np.linalg.norm(a - b))
        if gap > tolerance:
            raise EndpointMismatchError(f"trajectories do not share their {label} point (gap {gap:.3e} > {tolerance:.1e})")


def pair_contour(l1: Trajectory, l2: Trajectory) -> Trajectory:
    """Closed contour l1 followed by l2 traversed backwards."""
    check_shared_endpoints(l1, l2)
    return l1.joined(l2.reversed())


def enclosed_flux_term(contour: Trajectory, source: Source, charge: float = ELECTRON_CHARGE) -> tuple[float, int]:
    """
    -charge * linking * threaded flux for a closed ``contour``, and the linking.

    Raises:
        GeometryError: the source confines no flux (a single loop).
    """
    if not isinstance(source, TorusGeometry):
        raise GeometryError(f"{type(source).__name__} confines no flux; the enclosed flux is undefined")
    linking = linking_number(contour, source.core_disk())
    return -charge * linking * threaded_flux(source), linking


def phase_difference(
    l1: Trajectory,
    l2: Trajectory,
    source: Source,
    charge: float = ELECTRON_CHARGE,
    tol: float = DEFAULT_TOLERANCE,
) -> PhaseResult:
    """
    Phase of l1 minus phase of l2 (interaction term only).

    An inert ring in analytic mode answers with linking x flux exactly; any
    other source integrates both paths and, when it confines flux, reports
    the linking x flux prediction alongside.

    Raises:
        EndpointMismatchError: l1 and l2 do not share start and end points.
    """
    check_shared_endpoints(l1, l2)
    flux_term = None
    linking = None
    if isinstance(source, TorusGeometry):
        flux_term, linking = enclosed_flux_term(pair_contour(l1, l2), source, charge)

    if isinstance(source, InertFluxRing) and source.mode == "analytic":
        return PhaseResult.from_terms(flux_term, flux_term=flux_term, linking=linking)

    first = circulation(l1, source, tol)
    second = circulation(l2, source, tol)
    total = -charge * (first.value - second.value)
    result = PhaseResult.from_terms(
        total,
        flux_term=flux_term,
        linking=linking,
        error_estimate=abs(charge) * (first.error + second.error),
    )
    if result.flux_mismatch is not None:
        logger.info(
            "phase difference %.12g vs linking x flux %.12g (linking %d)", total, flux_term, linking
        )
    return result


def _rim_orientation(contour: Trajectory, disk: Disk) -> int:
    """+1 when ``contour`` runs right-handed about the disk normal, -1 otherwise."""
    if not contour.closed:
        raise ContourMismatchError("stokes diagnostic needs a closed contour")
    offset = contour.positions - disk.center.as_array()
    normal = disk.unit_normal.as_array()
    height = offset @ normal
    radial = np.linalg.norm(offset - np.outer(height, normal), axis=1)
    worst = float(max(np.abs(height).max(), np.abs(radial - disk.radius).max()))
    if worst > RIM_TOLERANCE:
        raise ContourMismatchError(
            f"contour leaves the rim of the disk by {worst:.3e} (> {RIM_TOLERANCE:.0e}); "
            "only planar circles bounding the disk are accepted"
        )
    area = np.cross(offset[:-1], offset[1:]).sum(axis=0) @ normal
    return 1 if area > 0 else -1


def stokes_residual(
    contour: Trajectory,
    disk: Disk,
    source: Source,
    tol: float = DEFAULT_TOLERANCE,
) -> float:
    """
    |circulation of A round the contour - flux of B through the disk|.

    The flux is taken along the disk normal and the circulation in the
    direction the contour runs, so a contour running left-handed about the
    normal reports about twice the flux. Both sides are evaluated on the
    exact circle; a polygonal contour adds no chord error.

    Raises:
        ContourMismatchError: the contour is open, non-planar or off the rim.
    """
    sign = _rim_orientation(contour, disk)
    around = disk_circulation(source, disk, min(tol, 1e-12)).value
    through = flux_through_disk(source, disk, tol).value
    residual = abs(sign * around - through)
    logger.debug("stokes: circulation %.15g, flux %.15g, residual %.3e", sign * around, through, residual)
    return residual
