"""
ablab - Aharonov-Bohm phase laboratory.

Computes the phase a traveling electron picks up from an inert flux ring
and from a classical toroidal coil of rotating charged liquid, where the
coil's kinetic-energy backreaction cancels the interaction term.

Main Components:
    CurrentLoop, ToroidalCoil, InertFluxRing: magnetic sources
    Trajectory, Disk, Vec3: geometry
    path_phase, phase_difference, coil_total_phase: phase accumulation
    simulate_experiment, measure_fringe_shift: two-beam interference
    load_scenario, run_suites: scenario files and verification suites
    ValidationLevel: enum for type-safe validation configuration (DISABLED, NORMAL, STRICT)

Example:
    >>> from ablab import InertFluxRing, BeamGeometry, simulate_experiment
    >>> ring = InertFluxRing(major_radius=1.0, minor_radius=0.1, total_flux=3.141592653589793)
    >>> result = simulate_experiment(ring, BeamGeometry())
    >>> result.pattern.fringe_shift_fraction
    0.5
"""

from .backreaction import coil_total_phase, emf_time_chain, interaction_lagrangian, liquid_kinetic_energy_change
from .core import Disk, Trajectory, Vec3, linking_number
from .interference import BeamGeometry, canonical_pair, measure_fringe_shift, simulate_experiment, two_beam_pattern
from .phase import ElectronState, PhaseResult, path_phase, phase_difference
from .scenario import Scenario, load_scenario
from .sources import CurrentLoop, InertFluxRing, ToroidalCoil
from .validation.core import ValidationLevel, set_validation_level
from .verification import run_suites

__version__ = "0.1.0"
__all__ = [
    "Vec3",
    "Disk",
    "Trajectory",
    "linking_number",
    "CurrentLoop",
    "ToroidalCoil",
    "InertFluxRing",
    "ElectronState",
    "PhaseResult",
    "path_phase",
    "phase_difference",
    "interaction_lagrangian",
    "liquid_kinetic_energy_change",
    "emf_time_chain",
    "coil_total_phase",
    "BeamGeometry",
    "canonical_pair",
    "two_beam_pattern",
    "measure_fringe_shift",
    "simulate_experiment",
    "Scenario",
    "load_scenario",
    "run_suites",
    "ValidationLevel",
    "set_validation_level",
]
