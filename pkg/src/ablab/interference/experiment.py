from __future__ import annotations

import logging
from typing import NamedTuple

from ..backreaction.total import coil_total_phase
from ..core.quadrature import DEFAULT_TOLERANCE
from ..phase.accumulate import enclosed_flux_term, pair_contour, phase_difference
from ..phase.electron import ELECTRON_CHARGE
from ..phase.result import PhaseResult
from ..sources.flux import Source
from ..sources.ring import InertFluxRing
from ..sources.torus import TorusGeometry
from .beams import BeamGeometry, Pairing, canonical_pair
from .pattern import InterferencePattern, two_beam_pattern

logger = logging.getLogger(__name__)


class ExperimentResult(NamedTuple):
    delta_phi: float
    pattern: InterferencePattern


def experiment_phase(
    source: Source,
    geom: BeamGeometry,
    pairing: Pairing = "cross-set",
    *,
    swap: bool = False,
    charge: float = ELECTRON_CHARGE,
    tol: float = DEFAULT_TOLERANCE,
) -> PhaseResult:
    """
    Phase difference of the canonical subbeam pair.

    The inert ring contributes its interaction phase only. Loops and coils
    react to the electron, so both trajectories carry their backreaction
    term as well.
    """
    l1, l2 = canonical_pair(geom, source, pairing, swap)
    if isinstance(source, InertFluxRing):
        return phase_difference(l1, l2, source, charge, tol)

    difference = coil_total_phase(l1, source, charge, tol) - coil_total_phase(l2, source, charge, tol)
    flux_term = linking = None
    if isinstance(source, TorusGeometry):
        flux_term, linking = enclosed_flux_term(pair_contour(l1, l2), source, charge)
    return PhaseResult.from_terms(
        difference.interaction_term,
        difference.backreaction_term,
        flux_term=flux_term,
        linking=linking,
        error_estimate=difference.error_estimate,
    )


def simulate_experiment(
    source: Source,
    geom: BeamGeometry,
    pairing: Pairing = "cross-set",
    *,
    swap: bool = False,
    charge: float = ELECTRON_CHARGE,
    n_samples: int | None = None,
    tol: float = DEFAULT_TOLERANCE,
) -> ExperimentResult:
    """
    Phase difference of the subbeams and the pattern it produces on the screen.

    Raises:
        ClearanceError: a chord of the canonical pair enters the source.
    """
    phase = experiment_phase(source, geom, pairing, swap=swap, charge=charge, tol=tol)
    logger.info(
        "%s %s: delta_phi %.12g (interaction %.12g, backreaction %.12g)",
        type(source).__name__,
        pairing,
        phase.total,
        phase.interaction_term,
        phase.backreaction_term,
    )
    return ExperimentResult(phase.total, two_beam_pattern(geom, phase.total, n_samples))
