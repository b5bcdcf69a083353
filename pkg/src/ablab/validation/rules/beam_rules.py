"""
Validation rules for BeamGeometry and InterferencePattern.
"""

from typing import TYPE_CHECKING, List

import numpy as np

from ..core import ValidationIssue
from ..rule_system import instance_rule
from ..validation_utils import check_positive_values, check_unit_vector

if TYPE_CHECKING:
    from ...interference.beams import BeamGeometry
    from ...interference.pattern import InterferencePattern
    from ..core import ValidationContext

MAX_TWO_BEAM_INTENSITY = 4.0


@instance_rule("BeamGeometry")
def validate_beam_geometry(geom: "BeamGeometry", context: "ValidationContext") -> List[ValidationIssue]:
    issues = check_positive_values(geom, "BEAM", {"slit_separation": "slit separation"}, "BEAM-SEP-001")
    issues.extend(check_positive_values(geom, "BEAM", {"phase_gradient": "fringe phase gradient"}, "BEAM-GRAD-001"))
    issues.extend(check_unit_vector(geom.screen_normal, "BEAM", "screen_normal", "BEAM-SCREEN-001"))
    issues.extend(check_unit_vector(geom.screen_axis, "BEAM", "screen_axis", "BEAM-SCREEN-002"))

    if not issues:
        overlap = abs(geom.screen_normal.dot(geom.screen_axis))
        if overlap > 1e-12:
            issues.append(
                ValidationIssue(
                    severity="error",
                    code="BEAM-SCREEN-003",
                    message=f"screen_axis must lie in the screen plane (|axis . normal| = {overlap:.3e})",
                    location="BEAM.screen_axis",
                )
            )

    if geom.fringe_count < 1:
        issues.append(
            ValidationIssue(
                severity="error",
                code="BEAM-FRINGE-001",
                message=f"fringe_count must be at least 1, got {geom.fringe_count}",
                location="BEAM.fringe_count",
            )
        )
    return issues


@instance_rule("InterferencePattern")
def validate_interference_pattern(
    pattern: "InterferencePattern", context: "ValidationContext"
) -> List[ValidationIssue]:
    issues = check_positive_values(pattern, "PATTERN", {"fringe_period": "fringe period"}, "PATTERN-PERIOD-001")

    if pattern.screen_positions.shape != pattern.intensities.shape:
        issues.append(
            ValidationIssue(
                severity="error",
                code="PATTERN-SHAPE-001",
                message=(
                    f"{pattern.intensities.shape[0]} intensities for "
                    f"{pattern.screen_positions.shape[0]} screen positions"
                ),
                location="PATTERN.intensities",
            )
        )
        return issues

    slack = 1e-12 * MAX_TWO_BEAM_INTENSITY
    if np.any(pattern.intensities < -slack) or np.any(pattern.intensities > MAX_TWO_BEAM_INTENSITY + slack):
        issues.append(
            ValidationIssue(
                severity="error",
                code="PATTERN-INT-001",
                message="intensities must lie in [0, 4] for unit-amplitude subbeams",
                location="PATTERN.intensities",
            )
        )

    if not -0.5 < pattern.fringe_shift_fraction <= 0.5:
        issues.append(
            ValidationIssue(
                severity="error",
                code="PATTERN-SHIFT-001",
                message=f"fringe_shift_fraction {pattern.fringe_shift_fraction} outside (-0.5, 0.5]",
                location="PATTERN.fringe_shift_fraction",
            )
        )
    return issues
