"""
Interaction term and kinetic-energy change of the charged liquid.

For a loop of current I = rho * v and an electron of charge q at x moving
with velocity v_e:

    L_int   = q I loop_integral((v_e . dl) / |l - x|)
    Delta_T = -I loop_integral(A_e . dl)

The two are computed along independent routes and cancel pointwise.
"""

from __future__ import annotations

import numpy as np
from pydantic import FiniteFloat

from ..core.base import DomainModel
from ..core.quadrature import QuadratureResult
from ..sources.loop import NEAR_WIRE_EPSILON, CurrentLoop, loop_vector_potential
from ..phase.electron import ElectronState
from .potentials import WIRE_TOLERANCE, electron_loop_circulation, electron_loop_emf, wire_integral


class BackreactionRecord(DomainModel):
    """Energy bookkeeping of one loop at one instant of the flyby."""

    time: FiniteFloat
    interaction_lagrangian: FiniteFloat
    delta_T: FiniteFloat
    emf_integrand: FiniteFloat


def _velocity_line_integral(
    loop: CurrentLoop, e: ElectronState, tol: float, near_wire_epsilon: float
) -> QuadratureResult:
    x = e.position.as_array()
    ve = e.velocity.as_array()

    def integrand(points: np.ndarray, tangents: np.ndarray) -> np.ndarray:
        return (tangents @ ve) / np.linalg.norm(points - x, axis=1)

    return wire_integral(loop, x, integrand, tol, near_wire_epsilon=near_wire_epsilon)


def interaction_lagrangian(
    loop: CurrentLoop,
    e: ElectronState,
    tol: float = WIRE_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> float:
    """q * I * loop_integral((v_e . dl) / r) by adaptive quadrature over the wire."""
    line = _velocity_line_integral(loop, e, tol, near_wire_epsilon)
    return e.charge * loop.current * line.value


def interaction_lagrangian_reciprocal(
    loop: CurrentLoop, e: ElectronState, *, near_wire_epsilon: float = NEAR_WIRE_EPSILON
) -> float:
    """q * v_e . A(x_e) with the closed-form loop potential."""
    potential = loop_vector_potential(loop, e.position, near_wire_epsilon=near_wire_epsilon)
    return e.charge * e.velocity.dot(potential)


def liquid_kinetic_energy_change(
    loop: CurrentLoop,
    e: ElectronState,
    tol: float = WIRE_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> float:
    """Delta_T = -I * loop_integral(A_e . dl); the liquid's own speed change is neglected."""
    around = electron_loop_circulation(loop, e, tol, near_wire_epsilon=near_wire_epsilon)
    return -loop.current * around.value


def emf_integrand(
    loop: CurrentLoop,
    e: ElectronState,
    tol: float = WIRE_TOLERANCE,
    *,
    near_wire_epsilon: float = NEAR_WIRE_EPSILON,
) -> float:
    """
    I times the EMF the uniformly moving electron induces round the loop.

    With A_e = q v / r, the induced field is -dA_e/dt and its circulation is
    -q loop_integral((v . dl) ((l - x) . v) / r^3); this is d(Delta_T)/dt.
    """
    return loop.current * electron_loop_emf(loop, e, tol, near_wire_epsilon=near_wire_epsilon).value


def backreaction_record(
    loop: CurrentLoop,
    e: ElectronState,
    t: float,
    tol: float = WIRE_TOLERANCE,
) -> BackreactionRecord:
    return BackreactionRecord(
        time=t,
        interaction_lagrangian=interaction_lagrangian(loop, e, tol),
        delta_T=liquid_kinetic_energy_change(loop, e, tol),
        emf_integrand=emf_integrand(loop, e, tol),
    )
