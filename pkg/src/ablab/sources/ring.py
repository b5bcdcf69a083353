from __future__ import annotations

import logging
from functools import lru_cache
from typing import Literal

from pydantic import FiniteFloat

from ..core.vectors import Vec3
from .coil import ToroidalCoil
from .loop import LoopArrays, rim_circulation
from .torus import TorusGeometry

logger = logging.getLogger(__name__)

CALIBRATION_TOLERANCE = 1e-13


@lru_cache(maxsize=64)
def _unit_current_circulation(major_radius: float, minor_radius: float, loop_count: int) -> float:
    """Meridional-rim circulation of a coil carrying unit current; invariant under rigid motion."""
    unit_coil = ToroidalCoil(
        major_radius=major_radius,
        minor_radius=minor_radius,
        loop_count=loop_count,
        linear_charge_density=1.0,
        liquid_speed=1.0,
    )
    circulation = rim_circulation(unit_coil.arrays(), unit_coil.meridional_disk(), CALIBRATION_TOLERANCE).value
    logger.debug(
        "calibrated R=%g a=%g N=%d: circulation per unit current %.15g",
        major_radius,
        minor_radius,
        loop_count,
        circulation,
    )
    return circulation


class InertFluxRing(TorusGeometry):
    """
    Idealised ferromagnetic ring carrying a fixed flux ``total_flux``.

    The ring is inert: the passing electron does not change its state. In
    ``analytic`` mode the phase of a closed contour is exactly
    linking x flux. Field values, in either mode, come from the
    equivalent coil: a ToroidalCoil of the same geometry whose current is
    calibrated so that its circulation round the meridional disk rim
    equals ``total_flux``. ``discrete`` mode routes phase differences
    through that coil as well.
    """

    total_flux: FiniteFloat
    mode: Literal["analytic", "discrete"] = "analytic"

    def equivalent_coil(self) -> ToroidalCoil:
        unit = _unit_current_circulation(self.major_radius, self.minor_radius, self.loop_count)
        u, _, _ = self.frame()
        return ToroidalCoil(
            major_radius=self.major_radius,
            minor_radius=self.minor_radius,
            loop_count=self.loop_count,
            axis=self.axis,
            center=self.center,
            reference_direction=Vec3.of(u),
            # only the product rho * v enters the field
            linear_charge_density=self.total_flux / unit,
            liquid_speed=1.0,
        )

    def arrays(self) -> LoopArrays:
        return self.equivalent_coil().arrays()

    def with_mode(self, mode: str) -> "InertFluxRing":
        return self.model_copy(update={"mode": mode})

    def scaled(self, factor: float) -> "InertFluxRing":
        return self.model_copy(update={"total_flux": self.total_flux * factor})


def ring_phase_flux(ring: InertFluxRing, path_pair_linking: int) -> float:
    """Flux enclosed by a contour that links the ring ``path_pair_linking`` times."""
    return path_pair_linking * ring.total_flux
