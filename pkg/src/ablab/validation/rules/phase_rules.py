"""
Validation rules for PhaseResult.
"""

from typing import TYPE_CHECKING, List

from ..core import ValidationIssue
from ..rule_system import instance_rule

if TYPE_CHECKING:
    from ...phase.result import PhaseResult
    from ..core import ValidationContext

SUM_TOLERANCE = 1e-12


@instance_rule("PhaseResult")
def validate_phase_result(result: "PhaseResult", context: "ValidationContext") -> List[ValidationIssue]:
    issues = []
    parts = result.interaction_term + result.backreaction_term
    scale = max(abs(result.interaction_term), abs(result.backreaction_term), 1.0)
    if abs(result.total - parts) > SUM_TOLERANCE * scale:
        issues.append(
            ValidationIssue(
                severity="error",
                code="PHASE-SUM-001",
                message=(
                    f"total {result.total!r} differs from interaction + backreaction {parts!r}"
                ),
                location="PhaseResult.total",
            )
        )
    if result.error_estimate < 0:
        issues.append(
            ValidationIssue(
                severity="error",
                code="PHASE-ERR-001",
                message=f"error_estimate must be non-negative, got {result.error_estimate}",
                location="PhaseResult.error_estimate",
            )
        )
    return issues
