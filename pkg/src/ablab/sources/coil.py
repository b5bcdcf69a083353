"""
Toroidal coil: a dense assembly of identical meridional loops carrying a
rotating charged liquid.

Loop k lies in the meridional half-plane at azimuth 2*pi*k/N, is centred
on the core circle and has the azimuthal direction as its normal, so the
field is confined to the tube and circulates along the torus.
"""

from __future__ import annotations

import numpy as np
from pydantic import FiniteFloat

from ..core.vectors import Vec3
from .loop import NEAR_WIRE_EPSILON, CurrentLoop, LoopArrays, evaluate_loops
from .torus import TorusGeometry


class ToroidalCoil(TorusGeometry):
    """
    ### Examples
    ```python
    coil = ToroidalCoil(major_radius=1.0, minor_radius=0.1, loop_count=360,
                        linear_charge_density=1.0, liquid_speed=0.01)
    coil.ideal_flux
    coil.with_loop_count(720)  # same ampere-turns
    ```
    """

    linear_charge_density: FiniteFloat = 1.0
    liquid_speed: FiniteFloat = 0.01

    @property
    def current(self) -> float:
        """Loop current I = rho * v."""
        return self.linear_charge_density * self.liquid_speed

    @property
    def ampere_turns(self) -> float:
        return self.loop_count * self.current

    @property
    def ideal_flux(self) -> float:
        """Flux of the continuous winding through one tube cross-section."""
        big_r, a = self.major_radius, self.minor_radius
        return 4.0 * np.pi * self.ampere_turns * (big_r - np.sqrt(big_r * big_r - a * a))

    @property
    def interior_field_scale(self) -> float:
        """Field magnitude 2 N I / R of the continuous winding on the core circle."""
        return 2.0 * self.ampere_turns / self.major_radius

    def arrays(self) -> LoopArrays:
        phi = self.loop_angles()
        centers = self.center.as_array() + self.major_radius * self.radial_direction(phi)
        return LoopArrays(
            centers=centers,
            normals=self.azimuthal_direction(phi),
            radii=np.full(self.loop_count, self.minor_radius),
            currents=np.full(self.loop_count, self.current),
        )

    def loops(self) -> list[CurrentLoop]:
        arrays = self.arrays()
        return [
            CurrentLoop(center=Vec3.of(c), unit_normal=Vec3.of(n), radius=r, current=i)
            for c, n, r, i in zip(*arrays)
        ]

    def with_loop_count(self, loop_count: int) -> "ToroidalCoil":
        """Same geometry and ampere-turns with ``loop_count`` loops (current per loop scales as 1/N)."""
        return ToroidalCoil.model_validate(
            {
                **self.model_dump(),
                "loop_count": loop_count,
                "linear_charge_density": self.linear_charge_density * self.loop_count / loop_count,
            }
        )

    def scaled(self, factor: float) -> "ToroidalCoil":
        return self.model_copy(update={"linear_charge_density": self.linear_charge_density * factor})


def coil_vector_potential(
    coil: ToroidalCoil, point, *, near_wire_epsilon: float = NEAR_WIRE_EPSILON
) -> Vec3:
    potential, _ = evaluate_loops(coil.arrays(), point, want_field=False, near_wire_epsilon=near_wire_epsilon)
    return Vec3.of(potential[0])


def coil_magnetic_field(
    coil: ToroidalCoil, point, *, near_wire_epsilon: float = NEAR_WIRE_EPSILON
) -> Vec3:
    _, field = evaluate_loops(coil.arrays(), point, near_wire_epsilon=near_wire_epsilon)
    return Vec3.of(field[0])
