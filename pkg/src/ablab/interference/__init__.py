from .beams import BeamGeometry, Pairing, canonical_pair, slit_points
from .clearance import check_clearance, excluded_section
from .experiment import ExperimentResult, experiment_phase, simulate_experiment
from .pattern import (
    DEFAULT_SAMPLES_PER_FRINGE,
    MIN_SAMPLES_PER_FRINGE,
    InterferencePattern,
    ensemble_pattern,
    measure_fringe_shift,
    screen_positions,
    two_beam_pattern,
    wrap_fraction,
)

__all__ = [
    "BeamGeometry",
    "Pairing",
    "InterferencePattern",
    "ExperimentResult",
    "DEFAULT_SAMPLES_PER_FRINGE",
    "MIN_SAMPLES_PER_FRINGE",
    "canonical_pair",
    "slit_points",
    "check_clearance",
    "excluded_section",
    "screen_positions",
    "two_beam_pattern",
    "ensemble_pattern",
    "measure_fringe_shift",
    "wrap_fraction",
    "experiment_phase",
    "simulate_experiment",
]
