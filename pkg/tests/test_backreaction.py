"""
Tests for the backreaction of the charged liquid: the electron's
potential, the interaction and kinetic-energy terms, the EMF chain and the
total phase of a trajectory past a reacting source.
"""

import logging

import numpy as np
import pytest

from ablab.backreaction.chain import TAIL_CUTOFF, emf_series, emf_time_chain
from ablab.backreaction.energy import (
    backreaction_record,
    emf_integrand,
    interaction_lagrangian,
    interaction_lagrangian_reciprocal,
    liquid_kinetic_energy_change,
)
from ablab.backreaction.potentials import (
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
from ablab.backreaction.surface import (
    disk_distance,
    electron_disk_flux,
    electron_disk_flux_rate,
    flux_time_derivative,
    loop_disk,
)
from ablab.backreaction.total import coil_total_phase
from ablab.core.errors import CoincidentPointError, GeometryError, NearWireError
from ablab.core.trajectory import Trajectory
from ablab.core.vectors import Vec3
from ablab.interference.beams import BeamGeometry, canonical_pair
from ablab.phase.accumulate import path_phase
from ablab.phase.electron import ElectronState
from ablab.sources.coil import ToroidalCoil
from ablab.sources.loop import CurrentLoop


def electron(position, velocity=(0.0, 0.0, 0.01), charge=-1.0) -> ElectronState:
    return ElectronState(position=Vec3.of(position), velocity=Vec3.of(velocity), charge=charge)


@pytest.fixture
def tilted_loop():
    return CurrentLoop(
        center=Vec3(x=0.1, y=-0.2),
        unit_normal=Vec3.of(np.array([1.0, 2.0, 2.0]) / 3.0),
        radius=0.8,
        current=0.4,
    )


HEADING = np.array([0.6, 0.3, 0.74]) / np.linalg.norm([0.6, 0.3, 0.74])
CROSSING = np.array([0.35, 0.2, 0.0])


def oblique_flight(half_length: float, n: int) -> Trajectory:
    """Straight flight through the unit loop's hole, oblique to its axis."""
    return Trajectory.straight(CROSSING - half_length * HEADING, CROSSING + half_length * HEADING, speed=0.01, n=n)


@pytest.fixture
def flyby():
    return oblique_flight(60.0, 2001)


class TestElectronPotential:
    def test_value(self):
        e = electron((0.0, 0.0, 0.0), (0.01, 0.0, 0.0))
        assert electron_vector_potential(e, (0.0, 2.0, 0.0)).as_array() == pytest.approx([-0.005, 0.0, 0.0])

    def test_decays_as_inverse_distance(self):
        e = electron((0.0, 0.0, 0.0), (0.0, 0.02, 0.0))
        near = electron_vector_potential(e, (3.0, 0.0, 0.0)).norm()
        far = electron_vector_potential(e, (6.0, 0.0, 0.0)).norm()
        assert np.log2(near / far) == pytest.approx(1.0, abs=1e-12)

    def test_coincident_point_rejected(self):
        with pytest.raises(CoincidentPointError):
            electron_vector_potential(electron((1.0, 1.0, 1.0)), (1.0, 1.0, 1.0))

    def test_electron_at_rest_has_no_potential(self, unit_loop):
        e = electron((0.2, 0.1, 0.3), (0.0, 0.0, 0.0))
        assert electron_vector_potential(e, (1.0, 0.0, 0.0)).norm() == 0.0
        assert electron_loop_circulation(unit_loop, e).value == 0.0


class TestLoopCirculation:
    def test_axis_motion_gives_no_circulation(self, unit_loop):
        e = electron((0.0, 0.0, 0.7), (0.0, 0.0, 0.01))
        assert electron_loop_circulation(unit_loop, e).value == pytest.approx(0.0, abs=1e-16)

    def test_batch_matches_single_loop_quadrature(self, small_coil, rng):
        loops = small_coil.loops()[:4]
        arrays = small_coil.arrays()
        positions = rng.uniform(-0.6, 0.6, size=(5, 3))
        velocities = rng.uniform(-0.01, 0.01, size=(5, 3))
        batch = electron_circulations(arrays, positions, velocities, -1.0)
        assert batch.shape == (5, small_coil.loop_count)
        for m, (x, v) in enumerate(zip(positions, velocities)):
            for k, loop in enumerate(loops):
                single = electron_loop_circulation(loop, electron(x, v)).value
                assert batch[m, k] == pytest.approx(single, rel=1e-10, abs=1e-14)

    def test_batch_rejects_near_wire(self, unit_loop):
        with pytest.raises(NearWireError):
            electron_circulations(unit_loop.arrays(), [(1.0, 0.0, 0.0)], [(0.0, 0.0, 0.01)], -1.0)

    def test_far_field_estimate(self, unit_loop):
        e = electron((60.0, 40.0, -50.0), (0.004, -0.002, 0.009))
        exact = electron_circulations(unit_loop.arrays(), [e.position.as_array()], [e.velocity.as_array()], e.charge)[0, 0]
        assert far_field_circulation(unit_loop, e) == pytest.approx(exact, rel=1e-6)


class TestElectronField:
    """B_e = curl A_e and its rate at fixed points."""

    POINT = np.array([1.1, 0.4, -0.3])

    def moving(self):
        return electron((0.3, -0.2, 0.5), (0.004, -0.007, 0.006))

    def test_field_is_curl_of_potential(self):
        e = self.moving()
        h = 1e-5
        jacobian = np.empty((3, 3))
        for j in range(3):
            step = np.zeros(3)
            step[j] = h
            plus = electron_vector_potential(e, self.POINT + step).as_array()
            minus = electron_vector_potential(e, self.POINT - step).as_array()
            jacobian[:, j] = (plus - minus) / (2.0 * h)
        curl = np.array(
            [
                jacobian[2, 1] - jacobian[1, 2],
                jacobian[0, 2] - jacobian[2, 0],
                jacobian[1, 0] - jacobian[0, 1],
            ]
        )
        field = electron_magnetic_field(e, self.POINT).as_array()
        assert np.linalg.norm(field) > 0
        assert field == pytest.approx(curl, rel=1e-7, abs=1e-12 * np.linalg.norm(field))

    def test_field_is_divergence_free(self):
        e = self.moving()
        h = 1e-5
        steps = h * np.eye(3)
        plus = electron_magnetic_fields(e, self.POINT + steps)
        minus = electron_magnetic_fields(e, self.POINT - steps)
        divergence = np.trace(plus - minus) / (2.0 * h)
        assert abs(divergence) <= 1e-8 * np.linalg.norm(electron_magnetic_field(e, self.POINT).as_array())

    def test_rate_is_time_derivative_at_fixed_point(self):
        e = self.moving()
        x0, v = e.position.as_array(), e.velocity.as_array()
        dt = 1e-3
        later = electron_magnetic_fields(electron(x0 + dt * v, v), self.POINT)[0]
        earlier = electron_magnetic_fields(electron(x0 - dt * v, v), self.POINT)[0]
        rate = electron_field_rates(e, self.POINT)[0]
        assert rate == pytest.approx((later - earlier) / (2.0 * dt), rel=1e-6, abs=1e-12 * np.linalg.norm(rate))

    def test_batched_points(self, rng):
        e = self.moving()
        points = rng.uniform(-2.0, 2.0, size=(6, 3))
        fields = electron_magnetic_fields(e, points)
        assert fields.shape == (6, 3)
        for point, field in zip(points, fields):
            assert electron_magnetic_field(e, point).as_array() == pytest.approx(field, rel=1e-14)

    def test_coincident_point_rejected(self):
        e = self.moving()
        with pytest.raises(CoincidentPointError):
            electron_field_rates(e, [(1.0, 1.0, 1.0), (0.3, -0.2, 0.5)])


class TestLoopEmf:
    """EMF of the moving electron round a loop."""

    def test_emf_is_minus_circulation_rate(self, tilted_loop):
        velocity = np.array([0.004, 0.002, -0.006])
        x0 = np.array([0.5, 0.6, 1.2])
        dt = 0.5

        def circulation(k: int) -> float:
            return electron_loop_circulation(tilted_loop, electron(x0 + k * dt * velocity, velocity)).value

        rate = (circulation(-2) - 8.0 * circulation(-1) + 8.0 * circulation(1) - circulation(2)) / (12.0 * dt)
        emf = electron_loop_emf(tilted_loop, electron(x0, velocity)).value
        assert emf != 0.0
        assert emf == pytest.approx(-rate, rel=1e-6)

    def test_batch_matches_single_loop_quadrature(self, small_coil, rng):
        loops = small_coil.loops()[:4]
        positions = rng.uniform(-0.6, 0.6, size=(5, 3))
        velocities = rng.uniform(-0.01, 0.01, size=(5, 3))
        batch = electron_emf_circulations(small_coil.arrays(), positions, velocities, -1.0)
        assert batch.shape == (5, small_coil.loop_count)
        for m, (x, v) in enumerate(zip(positions, velocities)):
            for k, loop in enumerate(loops):
                single = electron_loop_emf(loop, electron(x, v)).value
                assert batch[m, k] == pytest.approx(single, rel=1e-9, abs=1e-13)

    def test_emf_integrand_is_current_times_emf(self, tilted_loop):
        e = electron((0.2, -0.4, 0.9), (0.003, 0.001, 0.008))
        assert emf_integrand(tilted_loop, e) == pytest.approx(
            tilted_loop.current * electron_loop_emf(tilted_loop, e).value, rel=1e-12
        )

    def test_near_wire_rejected(self, unit_loop):
        with pytest.raises(NearWireError):
            electron_loop_emf(unit_loop, electron((1.0, 0.0, 0.0)))


class TestSurfaceLinks:
    """Stokes and Faraday links between the loop integrals and the disk fluxes."""

    STATES = [
        ((0.3, 0.2, 0.4), (0.004, -0.003, 0.009)),
        ((0.1, -0.5, -0.7), (-0.002, 0.006, 0.005)),
        ((1.8, 0.3, 0.6), (0.007, 0.001, -0.004)),
    ]

    @pytest.mark.parametrize("position, velocity", STATES)
    def test_circulation_equals_flux(self, unit_loop, position, velocity):
        e = electron(position, velocity)
        flux = electron_disk_flux(unit_loop, e).value
        assert flux != 0.0
        assert electron_loop_circulation(unit_loop, e).value == pytest.approx(flux, rel=1e-9)

    @pytest.mark.parametrize("position, velocity", STATES)
    def test_flux_rate_equals_flux_of_field_rate(self, unit_loop, position, velocity):
        e = electron(position, velocity)
        assert flux_time_derivative(unit_loop, e) == pytest.approx(
            electron_disk_flux_rate(unit_loop, e).value, rel=1e-6
        )

    @pytest.mark.parametrize("position, velocity", STATES)
    def test_emf_is_minus_flux_rate(self, unit_loop, position, velocity):
        e = electron(position, velocity)
        assert electron_loop_emf(unit_loop, e).value == pytest.approx(
            -electron_disk_flux_rate(unit_loop, e).value, rel=1e-8
        )

    def test_tilted_loop_links(self, tilted_loop):
        e = electron((0.5, 0.6, 1.2), (0.004, 0.002, -0.006))
        assert electron_loop_circulation(tilted_loop, e).value == pytest.approx(
            electron_disk_flux(tilted_loop, e).value, rel=1e-9
        )
        assert electron_loop_emf(tilted_loop, e).value == pytest.approx(
            -electron_disk_flux_rate(tilted_loop, e).value, rel=1e-8
        )

    def test_electron_on_disk_rejected(self, unit_loop):
        with pytest.raises(GeometryError, match="loop disk"):
            electron_disk_flux(unit_loop, electron((0.2, 0.1, 0.01)))

    def test_disk_distance(self, unit_loop):
        disk = loop_disk(unit_loop)
        assert disk.radius == unit_loop.radius
        assert disk_distance(disk, (0.3, 0.2, -0.4)) == pytest.approx(0.4)
        assert disk_distance(disk, (2.0, 0.0, 0.0)) == pytest.approx(1.0)
        assert disk_distance(disk, (0.0, 2.0, 1.0)) == pytest.approx(np.sqrt(2.0))

    def test_electron_at_rest_has_no_rate(self, unit_loop):
        e = electron((0.2, 0.1, 0.5), (0.0, 0.0, 0.0))
        assert flux_time_derivative(unit_loop, e) == 0.0
        assert electron_disk_flux_rate(unit_loop, e).value == 0.0



class TestEnergyTerms:
    """Interaction term and the liquid's kinetic-energy change."""

    @pytest.mark.parametrize(
        "position",
        [(0.3, 0.1, 0.2), (1.5, -0.4, 0.8), (-2.0, 1.0, -3.0), (0.0, 0.0, 0.5)],
    )
    def test_pointwise_cancellation(self, tilted_loop, position):
        e = electron(position, (0.006, -0.003, 0.004))
        l_int = interaction_lagrangian(tilted_loop, e)
        delta_t = liquid_kinetic_energy_change(tilted_loop, e)
        assert abs(l_int + delta_t) <= 1e-12 * max(abs(l_int), 1e-300)

    def test_reciprocity(self, tilted_loop):
        e = electron((0.4, 0.9, -0.3), (0.002, 0.005, -0.007))
        direct = interaction_lagrangian(tilted_loop, e)
        reciprocal = interaction_lagrangian_reciprocal(tilted_loop, e)
        assert direct == pytest.approx(reciprocal, rel=1e-10)

    def test_delta_t_falls_off_as_dipole(self, unit_loop):
        velocity = (0.0, 0.01, 0.0)
        near = liquid_kinetic_energy_change(unit_loop, electron((100.0, 0.0, 0.0), velocity))
        far = liquid_kinetic_energy_change(unit_loop, electron((200.0, 0.0, 0.0), velocity))
        assert np.log2(near / far) == pytest.approx(2.0, abs=1e-3)

    def test_emf_integrand_is_time_derivative(self, tilted_loop):
        velocity = np.array([0.004, 0.002, -0.006])
        x0 = np.array([0.5, 0.6, 1.2])
        h = 0.1
        before = liquid_kinetic_energy_change(tilted_loop, electron(x0 - h * velocity, velocity))
        after = liquid_kinetic_energy_change(tilted_loop, electron(x0 + h * velocity, velocity))
        rate = emf_integrand(tilted_loop, electron(x0, velocity))
        assert rate == pytest.approx((after - before) / (2.0 * h), rel=1e-5)

    def test_record(self, unit_loop, caplog):
        with caplog.at_level(logging.WARNING):
            record = backreaction_record(unit_loop, electron((0.2, 0.3, 0.4)), 12.5)
        assert record.time == 12.5
        assert record.interaction_lagrangian == pytest.approx(-record.delta_T, rel=1e-12)
        assert "BACK-CANCEL-001" not in caplog.text


class TestEmfChain:
    def test_routes_agree(self, unit_loop, flyby):
        chain = emf_series(unit_loop, flyby)
        assert chain.peak > 0
        assert np.abs(chain.integrated - chain.closed_form).max() <= 1e-6 * chain.peak
        assert chain.boundary_defect <= TAIL_CUTOFF * chain.peak

    def test_error_shrinks_with_step_count(self, unit_loop, flyby):
        fine = emf_series(unit_loop, flyby)
        coarse = emf_series(unit_loop, oblique_flight(60.0, 61))
        fine_error = np.abs(fine.integrated - fine.closed_form).max()
        coarse_error = np.abs(coarse.integrated - coarse.closed_form).max()
        assert 0.0 < fine_error <= 1e-6 * fine.peak
        assert coarse_error > 10.0 * fine_error

    def test_gauss_order_matters(self, unit_loop, flyby):
        gauss = emf_series(unit_loop, flyby)
        midpoint = emf_series(unit_loop, flyby, order=1)
        gauss_error = np.abs(gauss.integrated - gauss.closed_form).max()
        midpoint_error = np.abs(midpoint.integrated - midpoint.closed_form).max()
        assert midpoint_error > 100.0 * gauss_error

    def test_without_tail_starts_at_zero(self, unit_loop, flyby):
        chain = emf_series(unit_loop, flyby, far_field_tail=False)
        assert chain.integrated[0] == 0.0
        assert len(chain.times) == len(flyby.times)

    def test_start_too_close(self, unit_loop):
        traj = oblique_flight(10.0, 11)
        with pytest.raises(GeometryError, match="loop radii"):
            emf_series(unit_loop, traj)

    def test_boundary_defect_warns(self, unit_loop, caplog):
        traj = oblique_flight(6.0, 601)
        with caplog.at_level(logging.WARNING):
            chain = emf_series(unit_loop, traj, far_field_tail=False, far_field_distance=5.0)
        assert chain.boundary_defect > TAIL_CUTOFF * chain.peak
        assert "boundary defect" in caplog.text

    def test_time_chain_at_sample(self, unit_loop, flyby):
        chain = emf_series(unit_loop, flyby)
        integrated, closed_form = emf_time_chain(unit_loop, flyby, float(flyby.times[1000]))
        assert integrated == chain.integrated[1000]
        assert abs(integrated - closed_form) <= 1e-6 * chain.peak

    def test_time_chain_between_samples(self, unit_loop, flyby):
        t = 0.5 * float(flyby.times[1000] + flyby.times[1001])
        integrated, closed_form = emf_time_chain(unit_loop, flyby, t)
        chain = emf_series(unit_loop, flyby)
        assert abs(integrated - closed_form) <= 1e-6 * chain.peak

    def test_time_outside_span(self, unit_loop, flyby):
        with pytest.raises(ValueError, match="outside"):
            emf_time_chain(unit_loop, flyby, flyby.times[-1] + 10.0)


class TestCoilTotalPhase:
    def test_coil_cancels(self, small_coil):
        for traj in canonical_pair(BeamGeometry(), small_coil):
            phase = coil_total_phase(traj, small_coil)
            assert abs(phase.total) <= 1e-10
            assert phase.interaction_term == pytest.approx(path_phase(traj, small_coil), abs=1e-9)

    def test_single_loop_cancels(self, unit_loop):
        traj = Trajectory.polyline([(0, 0, -4), (0.5, 0, 0), (0, 0, 4)])
        phase = coil_total_phase(traj, unit_loop)
        assert phase.interaction_term != 0.0
        assert abs(phase.total) <= 1e-10

    def test_ring_does_not_react(self, ring):
        l1, _ = canonical_pair(BeamGeometry(), ring)
        phase = coil_total_phase(l1, ring)
        assert phase.backreaction_term == 0.0
        assert phase.interaction_term == pytest.approx(path_phase(l1, ring), abs=1e-9)

    def test_zero_current(self):
        coil = ToroidalCoil(major_radius=1.0, minor_radius=0.1, loop_count=12, liquid_speed=0.0)
        l1, _ = canonical_pair(BeamGeometry(), coil)
        phase = coil_total_phase(l1, coil)
        assert phase.total == 0.0
        assert phase.interaction_term == 0.0
        assert phase.backreaction_term == 0.0
