"""
Validation rules for BackreactionRecord.
"""

from typing import TYPE_CHECKING, List

from ..core import ValidationIssue
from ..rule_system import instance_rule

if TYPE_CHECKING:
    from ...backreaction.energy import BackreactionRecord
    from ..core import ValidationContext

CANCELLATION_TOLERANCE = 1e-12


@instance_rule("BackreactionRecord")
def validate_backreaction_record(record: "BackreactionRecord", context: "ValidationContext") -> List[ValidationIssue]:
    scale = max(abs(record.interaction_lagrangian), abs(record.delta_T))
    residual = abs(record.interaction_lagrangian + record.delta_T)
    if residual <= CANCELLATION_TOLERANCE * scale:
        return []
    return [
        ValidationIssue(
            severity="warning",
            code="BACK-CANCEL-001",
            message=(
                f"interaction term {record.interaction_lagrangian:.6e} and Delta_T {record.delta_T:.6e} "
                f"leave {residual:.3e} at t = {record.time}"
            ),
            location="BackreactionRecord.delta_T",
            suggestion="Tighten the wire quadrature tolerance",
        )
    ]
