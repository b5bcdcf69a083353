"""
Stokes check: circulation of A round a circle against the flux of B
through the disk it bounds.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, List

from ...core.trajectory import Trajectory
from ...core.vectors import Disk, Vec3
from ...phase.accumulate import stokes_residual
from ...sources.flux import Source, disk_circulation, threaded_flux
from ...sources.ring import InertFluxRing
from ...sources.torus import TorusGeometry
from ..registry import CheckOutcome, suite

if TYPE_CHECKING:
    from ...scenario.schema import Scenario

SUITE = "stokes"
STOKES_RELATIVE = 1e-6
CALIBRATION_RELATIVE = 1e-9
CONTOUR_VERTICES = 64

# fractions of the default meridional radius; none lands on the wire circle
MERIDIONAL_FRACTIONS = (0.15, 0.225, 0.3, 0.375, 0.45, 0.575, 0.65, 0.75, 0.85, 0.95)
# (height, radius) of coaxial disks in loop radii
COAXIAL_DISKS = tuple((h, r) for h in (0.25, 1.0) for r in (0.5, 0.9, 1.5, 2.0, 3.0))


def stokes_disks(source: Source) -> list[tuple[str, Disk]]:
    """Labelled disks whose rims stay clear of every wire."""
    if isinstance(source, TorusGeometry):
        outer = source.meridional_disk().radius
        return [
            (f"meridional r={f * outer:.4g}", source.meridional_disk(f * outer))
            for f in MERIDIONAL_FRACTIONS
        ]
    normal = source.unit_normal.as_array()
    center = source.center.as_array()
    return [
        (
            f"coaxial h={h:g} r={r:g}",
            Disk(
                center=Vec3.of(center + h * source.radius * normal),
                unit_normal=source.unit_normal,
                radius=r * source.radius,
            ),
        )
        for h, r in COAXIAL_DISKS
    ]


@suite(SUITE)
def stokes_suite(scenario: "Scenario") -> List[CheckOutcome]:
    source = scenario.build_source()
    tol = scenario.numerics.tolerance
    outcomes = []
    for label, disk in stokes_disks(source):
        contour = Trajectory.circle(disk, CONTOUR_VERTICES)
        residual = stokes_residual(contour, disk, source, tol)
        scale = abs(disk_circulation(source, disk).value)
        outcomes.append(CheckOutcome.measure(SUITE, label, residual, STOKES_RELATIVE * scale))

    if isinstance(source, InertFluxRing):
        calibrated = disk_circulation(source, source.meridional_disk()).value
        outcomes.append(
            CheckOutcome.measure(
                SUITE,
                "calibrated flux",
                abs(calibrated - threaded_flux(source)),
                CALIBRATION_RELATIVE * abs(source.total_flux),
                detail=f"equivalent coil carries {calibrated:.12g}",
            )
        )
    return outcomes
