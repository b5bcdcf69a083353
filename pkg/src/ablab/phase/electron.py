from __future__ import annotations

from pydantic import FiniteFloat

from ..core.base import DomainModel
from ..core.trajectory import Trajectory, TrajectorySample
from ..core.vectors import Vec3

ELECTRON_CHARGE = -1.0


class ElectronState(DomainModel):
    """
    Instantaneous state of the traveling electron.

    ``charge`` defaults to -1 (the electron's -e in units of e). Speeds are
    in units of c; above 0.1 the quasi-static potential is only a rough
    approximation and a warning is logged.
    """

    position: Vec3
    velocity: Vec3
    charge: FiniteFloat = ELECTRON_CHARGE

    @classmethod
    def from_sample(cls, sample: TrajectorySample, charge: float = ELECTRON_CHARGE) -> "ElectronState":
        return cls(position=sample.position, velocity=sample.velocity, charge=charge)

    @classmethod
    def on(cls, traj: Trajectory, t: float, charge: float = ELECTRON_CHARGE) -> "ElectronState":
        """State interpolated on ``traj`` at time ``t``."""
        return cls.from_sample(traj.state_at(t), charge)
