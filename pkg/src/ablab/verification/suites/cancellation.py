"""
Cancellation of the interaction term by the liquid's backreaction, pointwise
on random loop/electron states and integrated along the scenario's subbeams.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, List

import numpy as np

from ...backreaction.energy import (
    interaction_lagrangian,
    interaction_lagrangian_reciprocal,
    liquid_kinetic_energy_change,
)
from ...backreaction.total import coil_total_phase
from ...core.vectors import Vec3
from ...helpers.geometry_helper import random_rotation
from ...interference.beams import canonical_pair
from ...phase.accumulate import phase_difference
from ...phase.electron import ElectronState
from ...sources.coil import ToroidalCoil
from ...sources.flux import threaded_flux
from ...sources.loop import CurrentLoop, loop_vector_potential, wire_clearance
from ...sources.ring import InertFluxRing
from ...sources.torus import TorusGeometry
from ..registry import CheckOutcome, suite

if TYPE_CHECKING:
    from ...scenario.schema import Scenario

SUITE = "cancellation"
RANDOM_PAIRS = 100
POINTWISE_RELATIVE = 1e-12
ROUTE_RELATIVE = 1e-10
TRAJECTORY_RELATIVE = 1e-10
CONTRAST_RELATIVE = 1e-8
LIQUID_SPEED_FACTOR = 10.0
MIN_WIRE_CLEARANCE = 0.1


def random_loop_states(rng: np.random.Generator, count: int, charge: float) -> list[tuple[CurrentLoop, ElectronState]]:
    """Random loops with an electron at least 0.1 radius from the wire and speed below 0.05."""
    pairs = []
    while len(pairs) < count:
        radius = rng.uniform(0.5, 2.0)
        loop = CurrentLoop(
            center=Vec3.of(rng.uniform(-1.0, 1.0, 3)),
            unit_normal=Vec3.of(random_rotation(rng)[:, 2]),
            radius=radius,
            current=rng.choice([-1.0, 1.0]) * rng.uniform(0.1, 1.0),
        )
        direction = rng.normal(size=3)
        position = loop.center.as_array() + radius * rng.uniform(0.2, 3.0) * direction / np.linalg.norm(direction)
        clearance, _ = wire_clearance(loop.arrays(), position)
        if clearance[0] <= MIN_WIRE_CLEARANCE:
            continue
        heading = rng.normal(size=3)
        velocity = rng.uniform(0.001, 0.05) * heading / np.linalg.norm(heading)
        pairs.append((loop, ElectronState(position=Vec3.of(position), velocity=Vec3.of(velocity), charge=charge)))
    return pairs


def _relative(difference: float, scale: float) -> float:
    return abs(difference) / scale if scale > 0.0 else abs(difference)


def pointwise_checks(scenario: "Scenario") -> List[CheckOutcome]:
    rng = np.random.default_rng(scenario.numerics.seed)
    pairs = random_loop_states(rng, RANDOM_PAIRS, scenario.beam.charge)

    cancellation = route = scaled = 0.0
    for index, (loop, e) in enumerate(pairs):
        interaction = interaction_lagrangian(loop, e)
        delta_t = liquid_kinetic_energy_change(loop, e)
        cancellation = max(cancellation, _relative(interaction + delta_t, abs(interaction)))

        reciprocal = interaction_lagrangian_reciprocal(loop, e)
        potential = loop_vector_potential(loop, e.position)
        term_scale = abs(e.charge) * e.velocity.norm() * potential.norm()
        route = max(route, _relative(interaction - reciprocal, term_scale))

        if index % 10 == 0:
            fast = loop.scaled(LIQUID_SPEED_FACTOR)
            fast_interaction = interaction_lagrangian(fast, e)
            scaled = max(
                scaled,
                _relative(fast_interaction + liquid_kinetic_energy_change(fast, e), abs(fast_interaction)),
            )

    return [
        CheckOutcome.measure(SUITE, "pointwise", cancellation, POINTWISE_RELATIVE, detail=f"{len(pairs)} random states"),
        CheckOutcome.measure(SUITE, "reciprocity", route, ROUTE_RELATIVE, detail="relative to |q v| |A|"),
        CheckOutcome.measure(
            SUITE, "liquid speed x10", scaled, POINTWISE_RELATIVE, detail=f"{len(pairs[::10])} random states"
        ),
    ]


def _inert_counterpart(coil: ToroidalCoil) -> InertFluxRing:
    u, _, _ = coil.frame()
    return InertFluxRing(
        major_radius=coil.major_radius,
        minor_radius=coil.minor_radius,
        loop_count=coil.loop_count,
        axis=coil.axis,
        center=coil.center,
        reference_direction=Vec3.of(u),
        total_flux=threaded_flux(coil),
    )


def trajectory_checks(scenario: "Scenario") -> List[CheckOutcome]:
    """
    Both subbeams of the cross-set pair against the reacting source.

    An inert ring is replaced by its equivalent coil, so every scenario
    compares a reacting coil with an inert ring of the same flux.
    """
    source = scenario.build_source()
    charge = scenario.beam.charge
    tol = scenario.numerics.tolerance
    reacting = source.equivalent_coil() if isinstance(source, InertFluxRing) else source

    l1, l2 = canonical_pair(scenario.geometry(), source, "cross-set")
    first = coil_total_phase(l1, reacting, charge, tol, near_wire_epsilon=scenario.numerics.near_wire_epsilon)
    second = coil_total_phase(l2, reacting, charge, tol, near_wire_epsilon=scenario.numerics.near_wire_epsilon)
    worst = max(_relative(r.total, abs(r.interaction_term)) for r in (first, second))
    outcomes = [
        CheckOutcome.measure(
            SUITE,
            "trajectory total",
            worst,
            TRAJECTORY_RELATIVE,
            detail=f"interaction {first.interaction_term:.6e} / {second.interaction_term:.6e}",
        )
    ]

    if not isinstance(source, TorusGeometry):
        outcomes.append(CheckOutcome.skipped(SUITE, "contrast", "a single loop confines no flux"))
        return outcomes

    inert = source if isinstance(source, InertFluxRing) else _inert_counterpart(source)
    inert_phase = phase_difference(l1, l2, inert.with_mode("analytic"), charge, tol).total
    coil_phase = (first - second).total
    outcomes.append(
        CheckOutcome.measure(
            SUITE,
            "contrast",
            abs(coil_phase),
            CONTRAST_RELATIVE * abs(inert_phase),
            detail=f"inert delta_phi {inert_phase:.12g}",
        )
    )
    return outcomes


@suite(SUITE)
def cancellation_suite(scenario: "Scenario") -> List[CheckOutcome]:
    return pointwise_checks(scenario) + trajectory_checks(scenario)
