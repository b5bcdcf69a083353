from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np
from pydantic import Field, field_validator

from .base import DomainModel
from .errors import EndpointMismatchError, GeometryError
from .vectors import Disk, Vec3, as_points

DEFAULT_SPEED = 0.01
ENDPOINT_TOLERANCE = 1e-9


class TrajectorySample(NamedTuple):
    t: float
    position: Vec3
    velocity: Vec3


def _frozen_array(value, columns: int | None) -> np.ndarray:
    array = np.array(value, dtype=float)
    if columns is not None:
        array = array.reshape(-1, columns)
    else:
        array = array.reshape(-1)
    if not np.all(np.isfinite(array)):
        raise ValueError("trajectory samples must be finite")
    array.setflags(write=False)
    return array


class Trajectory(DomainModel):
    """
    Time-ordered samples of an electron path.

    Positions are joined by straight segments; every phase integral runs
    over this polyline. Velocities are carried for the backreaction terms
    and checked against the positions on construction (a mismatch beyond
    ``consistency_tolerance`` is a warning).

    ### Examples
    ```python
    l1 = Trajectory.polyline([(0, 0, -4), (0, 0, 0), (0, 0, 4)])
    rim = Trajectory.circle(Disk(center=Vec3(), unit_normal=Vec3(z=1.0), radius=2.0))
    contour = l1.joined(l2.reversed())
    ```
    """

    times: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray
    closed: bool = False
    consistency_tolerance: float = Field(0.05, gt=0)

    @field_validator("times", mode="before")
    @classmethod
    def _coerce_times(cls, value):
        return _frozen_array(value, None)

    @field_validator("positions", "velocities", mode="before")
    @classmethod
    def _coerce_vectors(cls, value):
        return _frozen_array(as_points(value), 3)

    # Builders

    @classmethod
    def from_samples(cls, samples: Iterable[tuple], closed: bool = False) -> "Trajectory":
        rows = list(samples)
        return cls(
            times=[float(t) for t, _, _ in rows],
            positions=[Vec3.of(p).as_array() for _, p, _ in rows],
            velocities=[Vec3.of(v).as_array() for _, _, v in rows],
            closed=closed,
        )

    @classmethod
    def polyline(
        cls,
        points: Sequence,
        speed: float = DEFAULT_SPEED,
        closed: bool = False,
        t0: float = 0.0,
    ) -> "Trajectory":
        """
        Constant-speed path through ``points``.

        Each sample carries the velocity of its outgoing segment; the final
        sample keeps the incoming one. With ``closed=True`` the first point
        is appended when the list does not already end on it.
        """
        if speed <= 0:
            raise ValueError(f"speed must be positive, got {speed}")
        x = as_points(points)
        if closed and np.linalg.norm(x[-1] - x[0]) > 0.0:
            x = np.vstack([x, x[:1]])
        seg = np.diff(x, axis=0)
        lengths = np.linalg.norm(seg, axis=1)
        if len(lengths) == 0 or np.any(lengths == 0.0):
            raise GeometryError("polyline needs at least two distinct consecutive points")
        times = t0 + np.concatenate([[0.0], np.cumsum(lengths)]) / speed
        directions = seg / lengths[:, None]
        velocities = speed * np.vstack([directions, directions[-1:]])
        return cls(times=times, positions=x, velocities=velocities, closed=closed)

    @classmethod
    def straight(
        cls,
        start,
        end,
        speed: float = DEFAULT_SPEED,
        n: int = 2,
        t0: float = 0.0,
    ) -> "Trajectory":
        """Uniform straight flight from ``start`` to ``end`` sampled at ``n`` points."""
        if n < 2:
            raise ValueError(f"n must be at least 2, got {n}")
        a = Vec3.of(start).as_array()
        b = Vec3.of(end).as_array()
        length = float(np.linalg.norm(b - a))
        if length == 0.0:
            raise GeometryError("start and end coincide")
        s = np.linspace(0.0, 1.0, n)
        positions = a + s[:, None] * (b - a)
        positions[-1] = b
        velocity = speed * (b - a) / length
        return cls(
            times=t0 + s * length / speed,
            positions=positions,
            velocities=np.tile(velocity, (n, 1)),
        )

    @classmethod
    def circle(cls, disk: Disk, n: int = 64, speed: float = DEFAULT_SPEED, t0: float = 0.0) -> "Trajectory":
        """Closed polygon with ``n`` vertices on the rim of ``disk``, right-handed about its normal."""
        if n < 3:
            raise ValueError(f"n must be at least 3, got {n}")
        theta = 2.0 * np.pi * np.arange(n + 1) / n
        positions = disk.rim_points(theta)
        positions[-1] = positions[0]
        velocities = disk.rim_tangents(theta) * (speed / disk.radius)
        return cls(
            times=t0 + theta * disk.radius / speed,
            positions=positions,
            velocities=velocities,
            closed=True,
        )

    # Accessors

    @property
    def samples(self) -> list[TrajectorySample]:
        return [
            TrajectorySample(float(t), Vec3.of(x), Vec3.of(v))
            for t, x, v in zip(self.times, self.positions, self.velocities)
        ]

    @property
    def start(self) -> np.ndarray:
        return self.positions[0]

    @property
    def end(self) -> np.ndarray:
        return self.positions[-1]

    @property
    def segment_count(self) -> int:
        return len(self.times) - 1

    @property
    def segment_vectors(self) -> np.ndarray:
        return np.diff(self.positions, axis=0)

    @property
    def span(self) -> tuple[float, float]:
        return float(self.times[0]), float(self.times[-1])

    def length(self) -> float:
        return float(np.linalg.norm(self.segment_vectors, axis=1).sum())

    def points_at(self, u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """
        Positions and tangents dx/du at path parameters ``u`` in [0, segment_count].

        Integer ``u`` are the sample positions; tangents are the segment
        vectors, so integrating ``f(x) . dx/du`` over ``u`` is the line
        integral along the polyline.
        """
        u = np.asarray(u, dtype=float)
        k = np.clip(np.floor(u).astype(int), 0, self.segment_count - 1)
        d = self.segment_vectors
        return self.positions[k] + (u - k)[..., None] * d[k], d[k]

    def state_at(self, t: float) -> TrajectorySample:
        """Linearly interpolated position and velocity at time ``t``."""
        lo, hi = self.span
        slack = 1e-12 * max(1.0, abs(lo), abs(hi))
        if not lo - slack <= t <= hi + slack:
            raise ValueError(f"t = {t} outside trajectory span [{lo}, {hi}]")
        position = [np.interp(t, self.times, self.positions[:, i]) for i in range(3)]
        velocity = [np.interp(t, self.times, self.velocities[:, i]) for i in range(3)]
        return TrajectorySample(float(t), Vec3.of(position), Vec3.of(velocity))

    def motion_at(self, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """
        Positions and polyline velocities at times ``t`` (vectorised).

        The velocity is the segment vector over the segment duration, so
        ``v dt = dx`` holds exactly along the path.
        """
        t = np.asarray(t, dtype=float)
        k = np.clip(np.searchsorted(self.times, t, side="right") - 1, 0, self.segment_count - 1)
        dt = np.diff(self.times)[k]
        velocity = self.segment_vectors[k] / dt[..., None]
        return self.positions[k] + (t - self.times[k])[..., None] * velocity, velocity

    # Transformations

    def reversed(self) -> "Trajectory":
        lo, hi = self.span
        return Trajectory(
            times=(lo + hi) - self.times[::-1],
            positions=self.positions[::-1],
            velocities=-self.velocities[::-1],
            closed=self.closed,
            consistency_tolerance=self.consistency_tolerance,
        )

    def split(self, index: int) -> tuple["Trajectory", "Trajectory"]:
        """Two open trajectories sharing the interior sample ``index``."""
        if not 0 < index < self.segment_count:
            raise ValueError(f"split index must be interior (1..{self.segment_count - 1}), got {index}")
        head = slice(0, index + 1)
        tail = slice(index, None)
        return (
            Trajectory(times=self.times[head], positions=self.positions[head], velocities=self.velocities[head]),
            Trajectory(times=self.times[tail], positions=self.positions[tail], velocities=self.velocities[tail]),
        )

    def joined(self, other: "Trajectory", tolerance: float = ENDPOINT_TOLERANCE) -> "Trajectory":
        """
        Concatenate ``other`` after this trajectory.

        ``other`` is shifted in time to continue where this one ends. When
        the result ends on its own start (within ``tolerance``) the last
        position is snapped onto the first and the result is closed.
        """
        gap = float(np.linalg.norm(other.start - self.end))
        if gap > tolerance:
            raise EndpointMismatchError(f"cannot join trajectories: end/start gap {gap:.3e} > {tolerance:.1e}")
        times = np.concatenate([self.times, other.times[1:] - other.times[0] + self.times[-1]])
        positions = np.vstack([self.positions, other.positions[1:]])
        velocities = np.vstack([self.velocities[:-1], other.velocities])
        closed = bool(np.linalg.norm(positions[-1] - positions[0]) <= tolerance)
        if closed:
            positions[-1] = positions[0]
        return Trajectory(times=times, positions=positions, velocities=velocities, closed=closed)

    def refined(self, factor: int) -> "Trajectory":
        """Insert ``factor - 1`` evenly spaced samples into every segment; the path is unchanged."""
        if factor < 1:
            raise ValueError(f"factor must be at least 1, got {factor}")
        s = np.arange(factor) / factor
        k = np.repeat(np.arange(self.segment_count), factor)
        frac = np.tile(s, self.segment_count)
        positions = self.positions[k] + frac[:, None] * self.segment_vectors[k]
        times = self.times[k] + frac * np.diff(self.times)[k]
        velocities = self.velocities[k]
        return Trajectory(
            times=np.append(times, self.times[-1]),
            positions=np.vstack([positions, self.positions[-1:]]),
            velocities=np.vstack([velocities, self.velocities[-1:]]),
            closed=self.closed,
            consistency_tolerance=self.consistency_tolerance,
        )

    def rotated(self, rotation: np.ndarray, about: Vec3 | None = None) -> "Trajectory":
        pivot = np.zeros(3) if about is None else Vec3.of(about).as_array()
        positions = (self.positions - pivot) @ np.asarray(rotation).T + pivot
        if self.closed:
            positions[-1] = positions[0]
        return Trajectory(
            times=self.times,
            positions=positions,
            velocities=self.velocities @ np.asarray(rotation).T,
            closed=self.closed,
            consistency_tolerance=self.consistency_tolerance,
        )
