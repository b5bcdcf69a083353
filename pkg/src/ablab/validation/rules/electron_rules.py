"""
Validation rules for ElectronState.
"""

from typing import TYPE_CHECKING, List

from ..core import ValidationIssue
from ..messages import ErrorMessageBuilder
from ..rule_system import instance_rule

if TYPE_CHECKING:
    from ...phase.electron import ElectronState
    from ..core import ValidationContext

LIGHT_SPEED = 1.0
NONRELATIVISTIC_SPEED = 0.1


@instance_rule("ElectronState")
def validate_electron_state(state: "ElectronState", context: "ValidationContext") -> List[ValidationIssue]:
    issues = []
    speed = state.velocity.norm()

    if speed >= LIGHT_SPEED:
        issues.append(
            ValidationIssue(
                severity="error",
                code="ELEC-SPEED-001",
                message=ErrorMessageBuilder.build_message("OUT_OF_REGIME", field="|velocity|", value=speed, limit=LIGHT_SPEED),
                location="ElectronState.velocity",
                suggestion="Speeds are in units of c",
            )
        )
    elif speed > NONRELATIVISTIC_SPEED:
        issues.append(
            ValidationIssue(
                severity="warning",
                code="ELEC-SPEED-002",
                message=ErrorMessageBuilder.build_message(
                    "ASSUMPTION", field="|velocity|", value=speed, limit=NONRELATIVISTIC_SPEED, model="the quasi-static electron potential"
                ),
                location="ElectronState.velocity",
            )
        )

    return issues
