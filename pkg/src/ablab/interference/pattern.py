"""
Screen intensity of two unit-amplitude subbeams and the fringe shift
measured from sampled patterns.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from pydantic import FiniteFloat, field_validator

from ..core.base import DomainModel
from ..core.errors import GridMismatchError, UndersamplingError
from .beams import BeamGeometry

MIN_SAMPLES_PER_FRINGE = 16
DEFAULT_SAMPLES_PER_FRINGE = 64


def wrap_fraction(value: float) -> float:
    """Reduce a period fraction to (-0.5, 0.5]."""
    return float(value - np.ceil(value - 0.5))


class InterferencePattern(DomainModel):
    screen_positions: np.ndarray
    intensities: np.ndarray
    fringe_period: FiniteFloat
    fringe_shift_fraction: FiniteFloat

    @field_validator("screen_positions", "intensities", mode="before")
    @classmethod
    def _frozen(cls, value):
        array = np.array(value, dtype=float).reshape(-1)
        if not np.all(np.isfinite(array)):
            raise ValueError("pattern samples must be finite")
        array.setflags(write=False)
        return array

    @property
    def sample_count(self) -> int:
        return len(self.screen_positions)


def screen_positions(geom: BeamGeometry, n_samples: int) -> np.ndarray:
    """
    ``n_samples`` uniform positions covering ``fringe_count`` whole periods.

    The grid is periodic (the last period end is left out) and contains
    x = 0 exactly.
    """
    if n_samples < MIN_SAMPLES_PER_FRINGE * geom.fringe_count:
        raise UndersamplingError(
            f"{n_samples} samples over {geom.fringe_count} fringes; "
            f"at least {MIN_SAMPLES_PER_FRINGE} per fringe are needed"
        )
    step = geom.fringe_count * geom.fringe_period / n_samples
    return (np.arange(n_samples) - n_samples // 2) * step


def _default_samples(geom: BeamGeometry, n_samples: int | None) -> int:
    return DEFAULT_SAMPLES_PER_FRINGE * geom.fringe_count if n_samples is None else int(n_samples)


def two_beam_pattern(geom: BeamGeometry, delta_phi: float, n_samples: int | None = None) -> InterferencePattern:
    """
    I(x) = 2 (1 + cos(g x + delta_phi)).

    Raises:
        UndersamplingError: fewer than 16 samples per fringe period.
    """
    x = screen_positions(geom, _default_samples(geom, n_samples))
    intensities = 2.0 * (1.0 + np.cos(geom.phase_gradient * x + delta_phi))
    return InterferencePattern(
        screen_positions=x,
        intensities=intensities,
        fringe_period=geom.fringe_period,
        fringe_shift_fraction=wrap_fraction(delta_phi / (2.0 * np.pi)),
    )


def ensemble_pattern(
    geom: BeamGeometry,
    phases_1: Sequence[float],
    phases_2: Sequence[float],
    n_samples: int | None = None,
) -> InterferencePattern:
    """
    Coherent sum over several trajectories per subbeam.

    Each subbeam keeps unit total amplitude: its trajectories share it
    equally. With one phase per subbeam this is ``two_beam_pattern`` with
    ``delta_phi = phases_1[0] - phases_2[0]``.
    """
    first = np.asarray(phases_1, dtype=float)
    second = np.asarray(phases_2, dtype=float)
    if first.size == 0 or second.size == 0:
        raise ValueError("each subbeam needs at least one trajectory phase")
    x = screen_positions(geom, _default_samples(geom, n_samples))
    beam_1 = np.exp(1j * first).mean()
    beam_2 = np.exp(1j * second).mean()
    amplitude = beam_1 * np.exp(1j * geom.phase_gradient * x) + beam_2
    delta_phi = float(np.angle(beam_1) - np.angle(beam_2))
    return InterferencePattern(
        screen_positions=x,
        intensities=np.abs(amplitude) ** 2,
        fringe_period=geom.fringe_period,
        fringe_shift_fraction=wrap_fraction(delta_phi / (2.0 * np.pi)),
    )


def measure_fringe_shift(reference: InterferencePattern, shifted: InterferencePattern) -> float:
    """
    Shift of ``shifted`` against ``reference`` in fringe periods, in (-0.5, 0.5].

    The lag maximising the circular cross-correlation (by FFT) is refined
    by a parabola through the peak and its neighbours. Both patterns must
    cover whole periods on the same uniform grid.

    Raises:
        GridMismatchError: the screen positions or periods differ.
    """
    x = reference.screen_positions
    span = float(np.ptp(x)) or 1.0
    if x.shape != shifted.screen_positions.shape or not np.allclose(
        x, shifted.screen_positions, rtol=0.0, atol=1e-12 * span
    ):
        raise GridMismatchError("patterns are not sampled on the same screen positions")
    if not np.isclose(reference.fringe_period, shifted.fringe_period, rtol=1e-12, atol=0.0):
        raise GridMismatchError(
            f"fringe periods differ ({reference.fringe_period} vs {shifted.fringe_period})"
        )

    a = reference.intensities - reference.intensities.mean()
    b = shifted.intensities - shifted.intensities.mean()
    if not np.any(a) or not np.any(b):
        return 0.0
    correlation = np.fft.irfft(np.conj(np.fft.rfft(b)) * np.fft.rfft(a), n=len(a))

    n = len(correlation)
    peak = int(np.argmax(correlation))
    left, centre, right = correlation[(peak - 1) % n], correlation[peak], correlation[(peak + 1) % n]
    curvature = left - 2.0 * centre + right
    offset = 0.5 * (left - right) / curvature if curvature < 0.0 else 0.0

    step = (x[1] - x[0]) if n > 1 else reference.fringe_period
    return wrap_fraction((peak + offset) * step / reference.fringe_period)
