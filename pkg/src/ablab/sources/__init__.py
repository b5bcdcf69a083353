from .coil import ToroidalCoil, coil_magnetic_field, coil_vector_potential
from .flux import (
    FieldSample,
    Source,
    diagnostic_disk,
    disk_circulation,
    flux_through_disk,
    lattice,
    magnetic_field,
    meridional_disk,
    sample_field_grid,
    threaded_flux,
    vector_potential,
)
from .loop import (
    NEAR_WIRE_EPSILON,
    CurrentLoop,
    LoopArrays,
    biot_savart_reference,
    evaluate_loops,
    loop_magnetic_field,
    loop_vector_potential,
)
from .ring import InertFluxRing, ring_phase_flux
from .torus import DEFAULT_LOOP_COUNT, TorusGeometry

__all__ = [
    "NEAR_WIRE_EPSILON",
    "DEFAULT_LOOP_COUNT",
    "Source",
    "CurrentLoop",
    "LoopArrays",
    "TorusGeometry",
    "ToroidalCoil",
    "InertFluxRing",
    "FieldSample",
    "loop_vector_potential",
    "loop_magnetic_field",
    "biot_savart_reference",
    "coil_vector_potential",
    "coil_magnetic_field",
    "evaluate_loops",
    "vector_potential",
    "magnetic_field",
    "flux_through_disk",
    "disk_circulation",
    "meridional_disk",
    "diagnostic_disk",
    "threaded_flux",
    "ring_phase_flux",
    "lattice",
    "sample_field_grid",
]
