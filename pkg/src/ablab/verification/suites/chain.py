"""
Faraday chain: the time-integrated EMF of a straight flyby against the
closed-form kinetic-energy change of the liquid, and each link between
them at single flyby states: circulation of A_e against the flux of B_e,
the flux rate against the flux of dB_e/dt, and the EMF against minus that.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, List

import numpy as np

from ...backreaction.chain import TAIL_CUTOFF, emf_series, emf_time_chain
from ...backreaction.potentials import electron_loop_circulation, electron_loop_emf
from ...backreaction.surface import electron_disk_flux, electron_disk_flux_rate, flux_time_derivative
from ...core.trajectory import Trajectory
from ...core.vectors import Vec3
from ...helpers.geometry_helper import orthonormal_frame, unit
from ...phase.electron import ElectronState
from ...sources.coil import ToroidalCoil
from ...sources.loop import CurrentLoop
from ..registry import CheckOutcome, suite

if TYPE_CHECKING:
    from ...scenario.schema import Scenario

SUITE = "chain"
CHAIN_RELATIVE = 1e-6
FAR_END_DISTANCE = 300.0
# flyby positions for the single-state links, in loop radii from the crossing
LINK_OFFSETS = (-3.0, -1.0, -0.5, 0.5, 2.0)


def _flyby_line(loop: CurrentLoop) -> tuple[np.ndarray, np.ndarray]:
    """Point where the flyby crosses the loop disk, and its unit heading."""
    u, v, n = orthonormal_frame(loop.unit_normal.as_array())
    crossing = loop.center.as_array() + loop.radius * (0.35 * u + 0.2 * v)
    return crossing, unit(0.6 * u + 0.3 * v + 0.74 * n)


def flyby(loop: CurrentLoop, distance: float, steps: int, speed: float) -> Trajectory:
    """
    Straight flight through the loop's hole, starting and ending at least
    ``distance`` loop radii from its centre.
    """
    crossing, heading = _flyby_line(loop)
    half = distance * loop.radius + float(np.linalg.norm(crossing - loop.center.as_array()))
    return Trajectory.straight(crossing - half * heading, crossing + half * heading, speed, steps + 1)


def link_states(loop: CurrentLoop, speed: float, charge: float) -> List[ElectronState]:
    """States along the flyby line, none of them on the loop disk."""
    crossing, heading = _flyby_line(loop)
    return [
        ElectronState(
            position=Vec3.of(crossing + s * loop.radius * heading),
            velocity=Vec3.of(speed * heading),
            charge=charge,
        )
        for s in LINK_OFFSETS
    ]


def _worst(pairs: List[tuple[float, float]]) -> tuple[float, float]:
    """Largest |a - b| and largest |a| over the pairs."""
    return max(abs(a - b) for a, b in pairs), max(abs(a) for a, _ in pairs)


@suite(SUITE)
def chain_suite(scenario: "Scenario") -> List[CheckOutcome]:
    source = scenario.build_source()
    if isinstance(source, ToroidalCoil):
        loop = source.loops()[0]
    elif isinstance(source, CurrentLoop):
        loop = source
    else:
        return [CheckOutcome.skipped(SUITE, "flyby", "an inert ring has no liquid to react")]

    numerics = scenario.numerics
    charge = scenario.beam.charge
    speed = scenario.beam.speed
    traj = flyby(loop, numerics.flyby_distance, numerics.time_steps, speed)
    chain = emf_series(loop, traj, charge, far_field_distance=numerics.flyby_distance)

    t_mid = 0.5 * (traj.times[0] + traj.times[-1]) + 0.5 * (traj.times[1] - traj.times[0])
    integrated, closed_form = emf_time_chain(loop, traj, t_mid, charge, far_field_distance=numerics.flyby_distance)

    far = flyby(loop, FAR_END_DISTANCE, numerics.time_steps, speed)
    far_chain = emf_series(loop, far, charge)
    far_end = max(abs(far_chain.integrated[-1]), abs(far_chain.closed_form[-1]))

    states = link_states(loop, speed, charge)
    rates = [electron_disk_flux_rate(loop, e).value for e in states]
    stokes, flux_scale = _worst(
        [(electron_loop_circulation(loop, e).value, electron_disk_flux(loop, e).value) for e in states]
    )
    faraday, rate_scale = _worst([(rate, flux_time_derivative(loop, e)) for rate, e in zip(rates, states)])
    identity, _ = _worst([(rate, -electron_loop_emf(loop, e).value) for rate, e in zip(rates, states)])
    links = f"{len(states)} states off the loop disk"

    return [
        CheckOutcome.measure(
            SUITE,
            "flyby",
            float(np.abs(chain.integrated - chain.closed_form).max()),
            CHAIN_RELATIVE * chain.peak,
            detail=f"{numerics.time_steps} steps from {numerics.flyby_distance:g} radii",
        ),
        CheckOutcome.measure(SUITE, "mid flyby", abs(integrated - closed_form), CHAIN_RELATIVE * chain.peak),
        CheckOutcome.measure(SUITE, "far-field boundary", chain.boundary_defect, TAIL_CUTOFF * chain.peak),
        CheckOutcome.measure(
            SUITE,
            "far end",
            far_end,
            CHAIN_RELATIVE * far_chain.peak,
            detail=f"symmetric flyby to {FAR_END_DISTANCE:g} radii",
        ),
        CheckOutcome.measure(SUITE, "stokes step", stokes, CHAIN_RELATIVE * flux_scale, detail=links),
        CheckOutcome.measure(SUITE, "faraday step", faraday, CHAIN_RELATIVE * rate_scale, detail=links),
        CheckOutcome.measure(SUITE, "emf identity", identity, CHAIN_RELATIVE * rate_scale, detail=links),
    ]
