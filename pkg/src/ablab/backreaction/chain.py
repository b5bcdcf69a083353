"""
Time-integrated EMF against the closed-form kinetic-energy change.

The integrated route sums I * EMF dt over the trajectory. The EMF is the
circulation of the induced field -dA_e/dt, evaluated at Gauss-Legendre
nodes inside every sample step, so the route converges with the step
count and never telescopes into the closed form. The part of the integral
before the trajectory start (the electron coming in from infinity) is
estimated from the multipole expansion of the circulation.
"""

from __future__ import annotations

import logging
from typing import NamedTuple

import numpy as np

from ..core.errors import GeometryError
from ..core.quadrature import gauss_legendre
from ..core.trajectory import Trajectory
from ..core.vectors import Vec3
from ..phase.electron import ELECTRON_CHARGE, ElectronState
from ..sources.loop import CurrentLoop
from .energy import liquid_kinetic_energy_change
from .potentials import electron_circulations, electron_emf_circulations, far_field_circulation

logger = logging.getLogger(__name__)

FAR_FIELD_DISTANCE = 50.0
TAIL_CUTOFF = 1e-8
CHAIN_GAUSS_ORDER = 4


class EmfChain(NamedTuple):
    """Both routes at every trajectory sample."""

    times: np.ndarray
    circulation: np.ndarray
    integrated: np.ndarray
    closed_form: np.ndarray
    peak: float
    boundary_defect: float


def _check_start(loop: CurrentLoop, traj: Trajectory, far_field_distance: float) -> None:
    distance = float(np.linalg.norm(traj.start - loop.center.as_array()))
    if distance < far_field_distance * loop.radius:
        raise GeometryError(
            f"trajectory starts {distance / loop.radius:.3g} loop radii from the loop; "
            f"the EMF chain needs at least {far_field_distance:g}"
        )


def _work_over_steps(
    loop: CurrentLoop,
    traj: Trajectory,
    lo: np.ndarray,
    hi: np.ndarray,
    charge: float,
    order: int,
) -> np.ndarray:
    """Integral of I * EMF over each [lo_i, hi_i], which lie inside single trajectory steps."""
    nodes, weights = gauss_legendre(order)
    half = 0.5 * (hi - lo)
    times = (0.5 * (hi + lo))[:, None] + half[:, None] * nodes[None, :]
    x, v = traj.motion_at(times)
    emf = electron_emf_circulations(loop.arrays(), x.reshape(-1, 3), v.reshape(-1, 3), charge)[:, 0]
    return loop.current * half * (emf.reshape(times.shape) @ weights)


def emf_series(
    loop: CurrentLoop,
    traj: Trajectory,
    charge: float = ELECTRON_CHARGE,
    *,
    far_field_tail: bool = True,
    far_field_distance: float = FAR_FIELD_DISTANCE,
    order: int = CHAIN_GAUSS_ORDER,
) -> EmfChain:
    """
    Integrated EMF and closed-form Delta_T at every sample of ``traj``.

    The integrated route has an error of order (step / flyby scale)^(2 order)
    and shrinks as the trajectory is sampled more finely.

    Raises:
        GeometryError: the trajectory starts closer than ``far_field_distance``
            loop radii.
    """
    _check_start(loop, traj, far_field_distance)
    current = loop.current
    psi = electron_circulations(loop.arrays(), traj.positions, traj.velocities, charge)[:, 0]
    closed_form = -current * psi

    steps = _work_over_steps(loop, traj, traj.times[:-1], traj.times[1:], charge, order)
    integrated = np.concatenate([[0.0], np.cumsum(steps)])

    if far_field_tail:
        first = ElectronState(position=Vec3.of(traj.positions[0]), velocity=Vec3.of(traj.velocities[0]), charge=charge)
        integrated = integrated - current * far_field_circulation(loop, first)

    peak = float(np.abs(closed_form).max())
    defect = float(abs(integrated[0] - closed_form[0]))
    if defect > TAIL_CUTOFF * peak:
        logger.warning(
            "EMF chain boundary defect %.3e exceeds %.0e x peak |Delta_T| (%.3e); start the flyby further out",
            defect,
            TAIL_CUTOFF,
            peak,
        )
    logger.debug("EMF chain: %d steps, end mismatch %.3e", len(steps), abs(integrated[-1] - closed_form[-1]))
    return EmfChain(traj.times, psi, integrated, closed_form, peak, defect)


def emf_time_chain(
    loop: CurrentLoop,
    traj: Trajectory,
    t: float,
    charge: float = ELECTRON_CHARGE,
    *,
    far_field_tail: bool = True,
    far_field_distance: float = FAR_FIELD_DISTANCE,
    order: int = CHAIN_GAUSS_ORDER,
) -> tuple[float, float]:
    """
    (integrated, closed_form) at time ``t``.

    Between samples the last partial step, from the preceding sample to
    ``t``, is integrated with the same Gauss rule.

    Raises:
        GeometryError: start-distance precondition violated.
        ValueError: ``t`` lies outside the trajectory span.
    """
    state = ElectronState.on(traj, t, charge)
    chain = emf_series(
        loop, traj, charge, far_field_tail=far_field_tail, far_field_distance=far_field_distance, order=order
    )
    closed_form = liquid_kinetic_energy_change(loop, state)

    k = int(np.searchsorted(traj.times, t, side="right")) - 1
    k = min(max(k, 0), len(traj.times) - 1)
    if t == traj.times[k]:
        return float(chain.integrated[k]), closed_form

    partial = _work_over_steps(loop, traj, np.array([traj.times[k]]), np.array([t]), charge, order)
    return float(chain.integrated[k] + partial[0]), closed_form
