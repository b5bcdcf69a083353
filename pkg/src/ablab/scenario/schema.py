"""
Strict JSON schema of an ablab scenario.

Unknown keys are rejected at every level. The source section is checked
against its domain invariants when the scenario is validated, so a loaded
scenario always builds.
"""

from __future__ import annotations

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, PositiveFloat, PositiveInt, model_validator

from ..core.vectors import Vec3
from ..interference.beams import DEFAULT_FRINGE_COUNT, BeamGeometry, Pairing
from ..interference.pattern import DEFAULT_SAMPLES_PER_FRINGE
from ..phase.electron import ELECTRON_CHARGE
from ..sources.coil import ToroidalCoil
from ..sources.flux import Source
from ..sources.loop import NEAR_WIRE_EPSILON, CurrentLoop
from ..sources.ring import InertFluxRing
from ..sources.torus import DEFAULT_LOOP_COUNT

Vector = tuple[FiniteFloat, FiniteFloat, FiniteFloat]


class SchemaModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class NumericsSpec(SchemaModel):
    tolerance: PositiveFloat = 1e-10
    near_wire_epsilon: PositiveFloat = NEAR_WIRE_EPSILON
    time_steps: PositiveInt = 10_000
    loop_count: Optional[PositiveInt] = Field(None, description="Overrides the source's loop count")
    samples_per_fringe: PositiveInt = DEFAULT_SAMPLES_PER_FRINGE
    flyby_distance: PositiveFloat = Field(50.0, description="EMF chain start distance in loop radii")
    seed: int = 20_240_917


class LoopSpec(SchemaModel):
    kind: Literal["loop"]
    center: Vector = (0.0, 0.0, 0.0)
    unit_normal: Vector = (0.0, 0.0, 1.0)
    radius: FiniteFloat = 1.0
    linear_charge_density: FiniteFloat = 1.0
    liquid_speed: FiniteFloat = 0.01

    def build(self, numerics: NumericsSpec) -> CurrentLoop:
        return CurrentLoop(
            center=Vec3.of(self.center),
            unit_normal=Vec3.of(self.unit_normal),
            radius=self.radius,
            current=self.linear_charge_density * self.liquid_speed,
        )


class _TorusSpec(SchemaModel):
    major_radius: FiniteFloat
    minor_radius: FiniteFloat
    loop_count: int = DEFAULT_LOOP_COUNT
    axis: Vector = (0.0, 0.0, 1.0)
    center: Vector = (0.0, 0.0, 0.0)
    reference_direction: Optional[Vector] = (1.0, 0.0, 0.0)

    def _geometry(self, numerics: NumericsSpec) -> dict:
        return {
            "major_radius": self.major_radius,
            "minor_radius": self.minor_radius,
            "loop_count": numerics.loop_count or self.loop_count,
            "axis": Vec3.of(self.axis),
            "center": Vec3.of(self.center),
            "reference_direction": None if self.reference_direction is None else Vec3.of(self.reference_direction),
        }


class CoilSpec(_TorusSpec):
    kind: Literal["coil"]
    linear_charge_density: FiniteFloat = 1.0
    liquid_speed: FiniteFloat = 0.01

    def build(self, numerics: NumericsSpec) -> ToroidalCoil:
        return ToroidalCoil(
            **self._geometry(numerics),
            linear_charge_density=self.linear_charge_density,
            liquid_speed=self.liquid_speed,
        )


class RingSpec(_TorusSpec):
    kind: Literal["inert_ring"]
    total_flux: FiniteFloat
    mode: Literal["analytic", "discrete"] = "analytic"

    def build(self, numerics: NumericsSpec) -> InertFluxRing:
        return InertFluxRing(**self._geometry(numerics), total_flux=self.total_flux, mode=self.mode)


SourceSpec = Annotated[Union[LoopSpec, CoilSpec, RingSpec], Field(discriminator="kind")]


class BeamSpec(SchemaModel):
    source_point: Vector = (0.0, 0.0, -4.0)
    screen_origin: Vector = (0.0, 0.0, 4.0)
    screen_normal: Vector = (0.0, 0.0, 1.0)
    screen_axis: Vector = (1.0, 0.0, 0.0)
    slit_separation: FiniteFloat = 1.2
    phase_gradient: FiniteFloat = 6.283185307179586
    fringe_count: int = DEFAULT_FRINGE_COUNT
    speed: FiniteFloat = 0.01
    pairing: Pairing = "cross-set"
    charge: FiniteFloat = ELECTRON_CHARGE

    def geometry(self) -> BeamGeometry:
        return BeamGeometry(
            source_point=Vec3.of(self.source_point),
            screen_origin=Vec3.of(self.screen_origin),
            screen_normal=Vec3.of(self.screen_normal),
            screen_axis=Vec3.of(self.screen_axis),
            slit_separation=self.slit_separation,
            phase_gradient=self.phase_gradient,
            fringe_count=self.fringe_count,
            speed=self.speed,
        )


class OutputSpec(SchemaModel):
    grid: tuple[int, int, int] = (5, 5, 5)
    grid_extent: PositiveFloat = 2.0
    fields_csv: Optional[str] = None
    fringes_csv: Optional[str] = None


class Scenario(SchemaModel):
    """
    ### Examples
    ```python
    scenario = load_scenario("tonomura_inert")
    ring = scenario.build_source()
    geom = scenario.beam.geometry()
    ```
    """

    name: str
    description: str = ""
    source: SourceSpec
    beam: BeamSpec = BeamSpec()
    numerics: NumericsSpec = NumericsSpec()
    outputs: OutputSpec = OutputSpec()

    @model_validator(mode="after")
    def _check_domain(self) -> "Scenario":
        self.build_source()
        self.beam.geometry()
        return self

    @property
    def kind(self) -> str:
        return self.source.kind

    def build_source(self) -> Source:
        return self.source.build(self.numerics)

    def geometry(self) -> BeamGeometry:
        return self.beam.geometry()
