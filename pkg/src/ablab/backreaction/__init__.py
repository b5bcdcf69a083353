"""
Backreaction of the charged liquid on the traveling electron's phase.
"""

from .chain import CHAIN_GAUSS_ORDER, FAR_FIELD_DISTANCE, EmfChain, emf_series, emf_time_chain
from .energy import (
    BackreactionRecord,
    backreaction_record,
    emf_integrand,
    interaction_lagrangian,
    interaction_lagrangian_reciprocal,
    liquid_kinetic_energy_change,
)
from .potentials import (
    electron_circulations,
    electron_emf_circulations,
    electron_field_rates,
    electron_loop_circulation,
    electron_loop_emf,
    electron_magnetic_field,
    electron_magnetic_fields,
    electron_vector_potential,
    far_field_circulation,
)
from .surface import (
    disk_distance,
    electron_disk_flux,
    electron_disk_flux_rate,
    flux_time_derivative,
    loop_disk,
)
from .total import coil_total_phase

__all__ = [
    "CHAIN_GAUSS_ORDER",
    "FAR_FIELD_DISTANCE",
    "BackreactionRecord",
    "EmfChain",
    "electron_vector_potential",
    "electron_magnetic_field",
    "electron_magnetic_fields",
    "electron_field_rates",
    "electron_loop_circulation",
    "electron_loop_emf",
    "electron_circulations",
    "electron_emf_circulations",
    "far_field_circulation",
    "loop_disk",
    "disk_distance",
    "electron_disk_flux",
    "electron_disk_flux_rate",
    "flux_time_derivative",
    "interaction_lagrangian",
    "interaction_lagrangian_reciprocal",
    "liquid_kinetic_energy_change",
    "emf_integrand",
    "backreaction_record",
    "emf_series",
    "emf_time_chain",
    "coil_total_phase",
]
