"""
Validation rules for geometric primitives (Disk, Trajectory).
"""

from typing import TYPE_CHECKING, List

import numpy as np

from ..core import ValidationIssue
from ..messages import ErrorMessageBuilder
from ..rule_system import instance_rule
from ..validation_utils import check_unit_vector

if TYPE_CHECKING:
    from ...core.trajectory import Trajectory
    from ...core.vectors import Disk
    from ..core import ValidationContext

CLOSURE_TOLERANCE = 1e-12


@instance_rule("Disk")
def validate_disk(disk: "Disk", context: "ValidationContext") -> List[ValidationIssue]:
    return check_unit_vector(disk.unit_normal, "DISK", "unit_normal", "DISK-NORM-001")


@instance_rule("Trajectory")
def validate_trajectory(traj: "Trajectory", context: "ValidationContext") -> List[ValidationIssue]:
    """Sample count, time ordering, closure and velocity consistency."""
    issues: List[ValidationIssue] = []
    n = len(traj.times)

    if traj.positions.shape != (n, 3) or traj.velocities.shape != (n, 3):
        issues.append(
            ValidationIssue(
                severity="error",
                code="TRAJ-SHAPE-001",
                message=(
                    f"positions {traj.positions.shape} and velocities {traj.velocities.shape} "
                    f"must both be ({n}, 3)"
                ),
                location="Trajectory.samples",
            )
        )
        return issues

    if n < 2:
        issues.append(
            ValidationIssue(
                severity="error",
                code="TRAJ-SAMP-001",
                message=ErrorMessageBuilder.build_message("TOO_FEW", field="samples", minimum=2, actual=n),
                location="Trajectory.samples",
            )
        )
        return issues

    dt = np.diff(traj.times)
    if np.any(dt <= 0):
        index = int(np.argmax(dt <= 0)) + 1
        issues.append(
            ValidationIssue(
                severity="error",
                code="TRAJ-TIME-001",
                message=ErrorMessageBuilder.build_message("NOT_MONOTONIC", field="t", index=index),
                location=f"Trajectory.samples[{index}]",
            )
        )
        return issues

    if traj.closed:
        gap = float(np.linalg.norm(traj.positions[-1] - traj.positions[0]))
        if gap > CLOSURE_TOLERANCE:
            issues.append(
                ValidationIssue(
                    severity="error",
                    code="TRAJ-CLOSED-001",
                    message=ErrorMessageBuilder.build_message("NOT_CLOSED", field="trajectory", gap=gap),
                    location="Trajectory.closed",
                    suggestion="Repeat the first position as the last sample",
                )
            )

    issues.extend(_velocity_consistency(traj))
    return issues


def _velocity_consistency(traj: "Trajectory") -> List[ValidationIssue]:
    """A sample passes when its velocity matches the forward, backward or central difference."""
    x, v, t = traj.positions, traj.velocities, traj.times
    step = np.diff(x, axis=0) / np.diff(t)[:, None]
    forward = np.full_like(v, np.nan)
    forward[:-1] = step
    backward = np.full_like(v, np.nan)
    backward[1:] = step
    central = np.full_like(v, np.nan)
    if len(t) > 2:
        central[1:-1] = (x[2:] - x[:-2]) / (t[2:] - t[:-2])[:, None]
        if traj.closed:
            # wrap across the seam
            central[0] = central[-1] = (x[1] - x[-2]) / ((t[1] - t[0]) + (t[-1] - t[-2]))
    candidates = [forward, backward, central]

    scale = np.linalg.norm(v, axis=1)
    passed = np.zeros(len(t), dtype=bool)
    worst = np.full(len(t), np.inf)
    for fd in candidates:
        ok_rows = ~np.isnan(fd[:, 0])
        deviation = np.linalg.norm(v - np.nan_to_num(fd), axis=1)
        reference = np.maximum(scale, np.linalg.norm(np.nan_to_num(fd), axis=1))
        relative = np.where(reference > 0, deviation / np.where(reference > 0, reference, 1.0), 0.0)
        relative = np.where(ok_rows, relative, np.inf)
        passed |= relative <= traj.consistency_tolerance
        worst = np.minimum(worst, relative)

    if passed.all():
        return []
    index = int(np.argmax(~passed))
    return [
        ValidationIssue(
            severity="warning",
            code="TRAJ-VEL-001",
            message=ErrorMessageBuilder.build_message(
                "INCONSISTENT",
                field="velocity",
                reference="finite difference of positions",
                deviation=float(worst[index]),
                index=index,
            ),
            location=f"Trajectory.samples[{index}]",
            suggestion="Derive velocities from the sampled positions",
        )
    ]
