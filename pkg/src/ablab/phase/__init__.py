from .accumulate import (
    circulation,
    check_shared_endpoints,
    enclosed_flux_term,
    pair_contour,
    path_phase,
    phase_difference,
    stokes_residual,
)
from .electron import ELECTRON_CHARGE, ElectronState
from .result import PhaseResult

__all__ = [
    "ELECTRON_CHARGE",
    "ElectronState",
    "PhaseResult",
    "circulation",
    "path_phase",
    "check_shared_endpoints",
    "pair_contour",
    "enclosed_flux_term",
    "phase_difference",
    "stokes_residual",
]
