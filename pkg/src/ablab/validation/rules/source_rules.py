"""
Validation rules for magnetic sources.

Torus geometry is shared by ToroidalCoil and InertFluxRing: both require
minor_radius < major_radius and warn when the thin-tube assumption
a/R <= 0.1 is left. Positive radii are field constraints of the models.
"""

from typing import TYPE_CHECKING, List, Union

import numpy as np

from ..core import ValidationIssue
from ..messages import ErrorMessageBuilder
from ..rule_system import instance_rule
from ..validation_utils import check_nonzero_vector, check_unit_vector

if TYPE_CHECKING:
    from ...sources.coil import ToroidalCoil
    from ...sources.loop import CurrentLoop
    from ...sources.ring import InertFluxRing
    from ..core import ValidationContext

THIN_TUBE_RATIO = 0.1


@instance_rule("CurrentLoop")
def validate_current_loop(loop: "CurrentLoop", context: "ValidationContext") -> List[ValidationIssue]:
    return check_unit_vector(loop.unit_normal, "LOOP", "unit_normal", "LOOP-NORM-001")


def _torus_issues(source: Union["ToroidalCoil", "InertFluxRing"], area: str) -> List[ValidationIssue]:
    issues: List[ValidationIssue] = []
    if source.minor_radius >= source.major_radius:
        issues.append(
            ValidationIssue(
                severity="error",
                code=f"{area}-GEOM-001",
                message=ErrorMessageBuilder.build_message(
                    "INVALID_ORDER",
                    field="minor_radius",
                    relation="smaller than",
                    other="major_radius",
                    value=source.minor_radius,
                    other_value=source.major_radius,
                ),
                location=f"{area}.minor_radius",
                suggestion="The tube must fit inside the torus: use minor_radius < major_radius",
            )
        )
        return issues

    ratio = source.minor_radius / source.major_radius
    if ratio > THIN_TUBE_RATIO:
        issues.append(
            ValidationIssue(
                severity="warning",
                code=f"{area}-GEOM-003",
                message=ErrorMessageBuilder.build_message(
                    "ASSUMPTION", field="minor_radius/major_radius", value=ratio, limit=THIN_TUBE_RATIO, model="the thin-tube coil model"
                ),
                location=f"{area}.minor_radius",
                suggestion="Results remain exact for the discrete loops; only the a << R reading is affected",
            )
        )

    if source.loop_count < 3:
        issues.append(
            ValidationIssue(
                severity="error",
                code=f"{area}-N-001",
                message=ErrorMessageBuilder.build_message("TOO_FEW", field="loop_count", minimum=3, actual=source.loop_count),
                location=f"{area}.loop_count",
            )
        )

    issues.extend(check_nonzero_vector(source.axis, area, "axis", f"{area}-AXIS-001"))
    if not issues and source.reference_direction is not None:
        axis = np.array([source.axis.x, source.axis.y, source.axis.z])
        ref = np.array([source.reference_direction.x, source.reference_direction.y, source.reference_direction.z])
        if np.linalg.norm(np.cross(axis, ref)) <= 1e-12 * np.linalg.norm(axis) * max(np.linalg.norm(ref), 1e-300):
            issues.append(
                ValidationIssue(
                    severity="error",
                    code=f"{area}-AXIS-002",
                    message="reference_direction must not be parallel to the axis",
                    location=f"{area}.reference_direction",
                )
            )
    return issues


@instance_rule("ToroidalCoil")
def validate_toroidal_coil(coil: "ToroidalCoil", context: "ValidationContext") -> List[ValidationIssue]:
    return _torus_issues(coil, "COIL")


@instance_rule("InertFluxRing")
def validate_inert_flux_ring(ring: "InertFluxRing", context: "ValidationContext") -> List[ValidationIssue]:
    return _torus_issues(ring, "RING")
