"""
Tests for Vec3, Disk and Trajectory: construction, validation and the
builders and transformations used by the phase code.
"""

import logging

import numpy as np
import pytest

from ablab.core.errors import EndpointMismatchError, GeometryError
from ablab.core.trajectory import Trajectory
from ablab.core.vectors import Disk, Vec3, as_points
from ablab.helpers.geometry_helper import orthonormal_frame, random_rotation, rotation_matrix


class TestVec3:
    """Vector arithmetic and coercion."""

    def test_of_accepts_sequences_and_arrays(self):
        assert Vec3.of((1, 2, 3)) == Vec3(x=1.0, y=2.0, z=3.0)
        assert Vec3.of(np.array([1.0, 2.0, 3.0])).z == 3.0

    def test_arithmetic(self):
        a = Vec3(x=1.0, y=2.0)
        b = Vec3(z=3.0)
        assert (a + b).as_array().tolist() == [1.0, 2.0, 3.0]
        assert (a - b).as_array().tolist() == [1.0, 2.0, -3.0]
        assert (2 * a).y == 4.0
        assert (-a).x == -1.0
        assert a.dot(b) == 0.0
        assert Vec3(x=1.0).cross(Vec3(y=1.0)) == Vec3(z=1.0)

    def test_normalized(self):
        assert Vec3(x=3.0, y=4.0).normalized().norm() == pytest.approx(1.0)

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            Vec3(x=float("nan"))

    def test_rotation_about_pivot(self):
        quarter = rotation_matrix(np.array([0.0, 0.0, 1.0]), 0.5 * np.pi)
        moved = Vec3(x=2.0).rotated(quarter, about=Vec3(x=1.0))
        assert moved.as_array() == pytest.approx([1.0, 1.0, 0.0])

    def test_as_points_shapes(self):
        assert as_points(Vec3(x=1.0)).shape == (1, 3)
        assert as_points([Vec3(), Vec3(z=1.0)]).shape == (2, 3)
        assert as_points(np.zeros(3)).shape == (1, 3)


class TestFrames:
    def test_frame_is_right_handed(self, rng):
        for _ in range(10):
            u, v, n = orthonormal_frame(rng.normal(size=3))
            assert np.cross(u, v) == pytest.approx(n)
            assert u @ v == pytest.approx(0.0, abs=1e-15)

    def test_reference_direction_is_kept(self):
        u, _, _ = orthonormal_frame(np.array([0.0, 0.0, 2.0]), np.array([1.0, 0.0, 5.0]))
        assert u == pytest.approx([1.0, 0.0, 0.0])

    def test_parallel_reference_rejected(self):
        with pytest.raises(ValueError, match="parallel"):
            orthonormal_frame(np.array([0.0, 0.0, 1.0]), np.array([0.0, 0.0, 3.0]))

    def test_random_rotation_is_orthogonal(self, rng):
        r = random_rotation(rng)
        assert r @ r.T == pytest.approx(np.eye(3), abs=1e-14)
        assert np.linalg.det(r) == pytest.approx(1.0)


class TestDisk:
    def test_rim_lies_on_circle(self, xy_disk):
        theta = np.linspace(0.0, 2.0 * np.pi, 7)
        rim = xy_disk.rim_points(theta)
        assert np.linalg.norm(rim, axis=1) == pytest.approx(np.full(7, 2.0))
        assert rim[:, 2] == pytest.approx(np.zeros(7))

    def test_rim_runs_right_handed(self, xy_disk):
        tangent = xy_disk.rim_tangents(np.array([0.0]))[0]
        point = xy_disk.rim_points(np.array([0.0]))[0]
        assert np.cross(point, tangent)[2] > 0

    def test_negative_radius_rejected(self):
        with pytest.raises(ValueError, match="greater than 0"):
            Disk(center=Vec3(), unit_normal=Vec3(z=1.0), radius=-1.0)

    def test_non_unit_normal_rejected(self):
        with pytest.raises(ValueError, match="DISK-NORM-001"):
            Disk(center=Vec3(), unit_normal=Vec3(z=2.0), radius=1.0)


class TestTrajectoryBuilders:
    def test_polyline_times_follow_speed(self):
        traj = Trajectory.polyline([(0, 0, 0), (3, 4, 0), (3, 4, 1)], speed=0.5)
        assert traj.times.tolist() == pytest.approx([0.0, 10.0, 12.0])
        assert traj.velocities[0] == pytest.approx([0.3, 0.4, 0.0])
        assert traj.velocities[-1] == pytest.approx([0.0, 0.0, 0.5])
        assert traj.length() == pytest.approx(6.0)

    def test_polyline_rejects_repeated_points(self):
        with pytest.raises(GeometryError):
            Trajectory.polyline([(0, 0, 0), (0, 0, 0), (1, 0, 0)])

    def test_closed_polyline_appends_start(self):
        traj = Trajectory.polyline([(0, 0, 0), (1, 0, 0), (0, 1, 0)], closed=True)
        assert traj.closed
        assert traj.end == pytest.approx(traj.start)
        assert traj.segment_count == 3

    def test_straight_samples(self):
        traj = Trajectory.straight((0, 0, 0), (2, 0, 0), speed=0.1, n=5)
        assert len(traj.times) == 5
        assert traj.span == pytest.approx((0.0, 20.0))
        assert np.all(traj.velocities == pytest.approx(np.tile([0.1, 0.0, 0.0], (5, 1))))

    def test_circle_is_closed_and_on_rim(self, xy_disk):
        traj = Trajectory.circle(xy_disk, n=32)
        assert traj.closed
        assert np.linalg.norm(traj.positions, axis=1) == pytest.approx(np.full(33, 2.0))

    def test_arrays_are_read_only(self):
        traj = Trajectory.polyline([(0, 0, 0), (1, 0, 0)])
        with pytest.raises(ValueError):
            traj.positions[0, 0] = 5.0

    def test_samples_round_trip(self):
        traj = Trajectory.polyline([(0, 0, 0), (1, 0, 0), (1, 1, 0)])
        again = Trajectory.from_samples(traj.samples)
        assert again.times.tolist() == traj.times.tolist()
        assert again.positions.tolist() == traj.positions.tolist()


class TestTrajectoryValidation:
    def test_time_must_increase(self):
        with pytest.raises(ValueError, match="TRAJ-TIME-001"):
            Trajectory(times=[0.0, 0.0], positions=[(0, 0, 0), (1, 0, 0)], velocities=[(1, 0, 0), (1, 0, 0)])

    def test_needs_two_samples(self):
        with pytest.raises(ValueError, match="TRAJ-SAMP-001"):
            Trajectory(times=[0.0], positions=[(0, 0, 0)], velocities=[(1, 0, 0)])

    def test_closed_flag_checks_closure(self):
        with pytest.raises(ValueError, match="TRAJ-CLOSED-001"):
            Trajectory(
                times=[0.0, 1.0],
                positions=[(0, 0, 0), (1, 0, 0)],
                velocities=[(1, 0, 0), (1, 0, 0)],
                closed=True,
            )

    def test_inconsistent_velocity_is_a_warning(self, caplog):
        with caplog.at_level(logging.WARNING):
            traj = Trajectory(
                times=[0.0, 1.0, 2.0],
                positions=[(0, 0, 0), (1, 0, 0), (2, 0, 0)],
                velocities=[(0, 1, 0), (0, 1, 0), (0, 1, 0)],
            )
        assert traj.segment_count == 2
        assert "TRAJ-VEL-001" in caplog.text


class TestTrajectoryTransformations:
    def test_reversed_negates_velocity(self):
        traj = Trajectory.polyline([(0, 0, 0), (1, 0, 0), (1, 2, 0)])
        back = traj.reversed()
        assert back.start == pytest.approx(traj.end)
        assert back.velocities[0] == pytest.approx(-traj.velocities[-1])
        assert back.span == pytest.approx(traj.span)

    def test_joined_closes_contour(self):
        l1 = Trajectory.polyline([(0, 0, -1), (1, 0, 0), (0, 0, 1)])
        l2 = Trajectory.polyline([(0, 0, -1), (-1, 0, 0), (0, 0, 1)])
        contour = l1.joined(l2.reversed())
        assert contour.closed
        assert contour.segment_count == 4
        assert np.all(np.diff(contour.times) > 0)

    def test_joined_requires_shared_point(self):
        l1 = Trajectory.polyline([(0, 0, 0), (1, 0, 0)])
        l2 = Trajectory.polyline([(2, 0, 0), (3, 0, 0)])
        with pytest.raises(EndpointMismatchError):
            l1.joined(l2)

    def test_split_shares_sample(self):
        traj = Trajectory.polyline([(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0)])
        head, tail = traj.split(2)
        assert head.end == pytest.approx(tail.start)
        assert head.segment_count + tail.segment_count == traj.segment_count
        with pytest.raises(ValueError, match="interior"):
            traj.split(0)

    def test_refined_keeps_path(self):
        traj = Trajectory.polyline([(0, 0, 0), (1, 0, 0), (1, 1, 0)])
        fine = traj.refined(4)
        assert fine.segment_count == 8
        assert fine.length() == pytest.approx(traj.length())
        assert fine.end == pytest.approx(traj.end)

    def test_rotated_keeps_closure(self, xy_disk):
        rotation = rotation_matrix(np.array([1.0, 1.0, 0.0]), 0.7)
        traj = Trajectory.circle(xy_disk, 16).rotated(rotation)
        assert traj.closed
        assert traj.end.tolist() == traj.start.tolist()

    def test_state_at_interpolates(self):
        traj = Trajectory.straight((0, 0, 0), (1, 0, 0), speed=0.5, n=3)
        state = traj.state_at(1.0)
        assert state.position.x == pytest.approx(0.5)
        with pytest.raises(ValueError, match="outside"):
            traj.state_at(5.0)

    def test_motion_at_uses_segment_velocity(self):
        traj = Trajectory.polyline([(0, 0, 0), (1, 0, 0), (1, 3, 0)], speed=0.5)
        x, v = traj.motion_at(np.array([1.0, 4.0]))
        assert x == pytest.approx(np.array([[0.5, 0.0, 0.0], [1.0, 1.0, 0.0]]))
        assert v == pytest.approx(np.array([[0.5, 0.0, 0.0], [0.0, 0.5, 0.0]]))
