from __future__ import annotations

import logging

import numpy as np

from ..core.quadrature import DEFAULT_TOLERANCE, integrate_1d
from ..core.trajectory import Trajectory
from ..phase.electron import ELECTRON_CHARGE
from ..phase.result import PhaseResult
from ..sources.flux import Source
from ..sources.loop import NEAR_WIRE_EPSILON, evaluate_loops
from ..sources.ring import InertFluxRing
from .potentials import electron_circulations

logger = logging.getLogger(__name__)


def coil_total_phase(
    traj: Trajectory,
    source: Source,
    charge: float = ELECTRON_CHARGE,
    tol: float = DEFAULT_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> PhaseResult:
    """
    Phase of ``traj`` with the source's backreaction included.

    Both terms are minus the time integral of a Lagrangian contribution,
    summed over every loop in index order: the interaction q v . A(x) by
    the closed-form potential and the liquid's Delta_T by the A_e
    circulation. They share every quadrature node, so for a coil (or a
    single loop) the total cancels to roundoff. An inert ring does not
    react to the electron; its backreaction term is zero.
    """
    arrays = source.arrays()
    reacts = not isinstance(source, InertFluxRing)

    def lagrangians(t: np.ndarray) -> np.ndarray:
        x, v = traj.motion_at(t)
        potential, _ = evaluate_loops(arrays, x, want_field=False, near_wire_epsilon=near_wire_epsilon)
        interaction = charge * np.einsum("nk,nk->n", v, potential)
        if not reacts:
            return np.column_stack([interaction, np.zeros_like(interaction)])
        psi = electron_circulations(arrays, x, v, charge, near_wire_epsilon=near_wire_epsilon)
        delta_t = -(psi * arrays.currents[None, :]).sum(axis=1)
        return np.column_stack([interaction, delta_t])

    lo, hi = traj.span
    result = integrate_1d(lagrangians, lo, hi, tol, breakpoints=traj.times[1:-1])
    interaction_term, backreaction_term = -result.value[0], -result.value[1]
    phase = PhaseResult.from_terms(
        float(interaction_term),
        float(backreaction_term),
        error_estimate=result.error,
    )
    logger.debug(
        "%s: interaction %.12g, backreaction %.12g, total %.3e",
        type(source).__name__,
        phase.interaction_term,
        phase.backreaction_term,
        phase.total,
    )
    return phase
