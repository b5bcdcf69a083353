"""
Field confinement of the toroidal winding: outside the tube the field of a
discrete coil falls off as the winding gets denser.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, List

import numpy as np

from ...sources.coil import ToroidalCoil
from ...sources.flux import magnetic_field
from ...sources.ring import InertFluxRing
from ...sources.torus import TorusGeometry
from ..registry import CheckOutcome, suite

if TYPE_CHECKING:
    from ...scenario.schema import Scenario

SUITE = "confinement"
COARSE_LOOP_COUNT = 90
FINE_LOOP_COUNT = 720
EXTERNAL_POINTS = 50
MIN_SUPPRESSION = 10.0
MAX_LEAKAGE = 1e-3


def external_points(coil: TorusGeometry, rng: np.random.Generator, count: int = EXTERNAL_POINTS) -> np.ndarray:
    """
    Points 0.5 to 3 tube radii outside the tube surface.

    The distance from the core circle is capped halfway between the tube
    and the axis.
    """
    a, big_r = coil.minor_radius, coil.major_radius
    reach = np.minimum(a + rng.uniform(0.5, 3.0, count) * a, a + 0.5 * (big_r - a))
    phi = rng.uniform(0.0, 2.0 * np.pi, count)
    psi = rng.uniform(0.0, 2.0 * np.pi, count)
    _, _, n = coil.frame()
    radial = coil.radial_direction(phi)
    return (
        coil.center.as_array()
        + (big_r + reach * np.cos(psi))[:, None] * radial
        + (reach * np.sin(psi))[:, None] * n
    )


@suite(SUITE)
def confinement_suite(scenario: "Scenario") -> List[CheckOutcome]:
    source = scenario.build_source()
    if not isinstance(source, TorusGeometry):
        return [CheckOutcome.skipped(SUITE, "external field", "a single loop does not confine its field")]

    coil: ToroidalCoil = source.equivalent_coil() if isinstance(source, InertFluxRing) else source
    points = external_points(coil, np.random.default_rng(scenario.numerics.seed))
    coarse = coil.with_loop_count(COARSE_LOOP_COUNT)
    fine = coil.with_loop_count(FINE_LOOP_COUNT)
    b_coarse = float(np.linalg.norm(magnetic_field(coarse, points), axis=1).max())
    b_fine = float(np.linalg.norm(magnetic_field(fine, points), axis=1).max())
    scale = abs(fine.interior_field_scale)

    suppression = b_coarse / b_fine if b_fine > 0.0 else float("inf")
    return [
        CheckOutcome.measure(
            SUITE,
            f"suppression N={COARSE_LOOP_COUNT}->{FINE_LOOP_COUNT}",
            min(suppression, np.finfo(float).max),
            MIN_SUPPRESSION,
            at_least=True,
            detail=f"max |B| {b_coarse:.3e} -> {b_fine:.3e}",
        ),
        CheckOutcome.measure(
            SUITE,
            f"leakage N={FINE_LOOP_COUNT}",
            b_fine / scale if scale else b_fine,
            MAX_LEAKAGE,
            detail=f"interior scale {scale:.6g}",
        ),
    ]
