"""
Common validation utilities shared by the rule files.
"""

from typing import Any, Dict, List

import numpy as np

from .core import ValidationIssue
from .messages import ErrorMessageBuilder, not_positive_error, not_unit_error

UNIT_NORM_TOLERANCE = 1e-12


def check_positive_values(
    obj: Any,
    area: str,
    field_descriptions: Dict[str, str],
    code: str,
) -> List[ValidationIssue]:
    """
    Check that the named fields of ``obj`` are strictly positive.

    Args:
        obj: Domain object to validate
        area: Code prefix and location root (e.g. "LOOP")
        field_descriptions: Field name -> human readable description
        code: Full issue code used for every violation

    Example:
        >>> check_positive_values(geom, "BEAM", {"phase_gradient": "fringe phase gradient"}, "BEAM-GRAD-001")
    """
    issues = []
    for field_name, field_desc in field_descriptions.items():
        value = getattr(obj, field_name, None)
        if value is not None and not value > 0:
            issues.append(
                ValidationIssue(
                    severity="error",
                    code=code,
                    message=not_positive_error(field_name, value),
                    location=f"{area}.{field_name}",
                    suggestion=f"Use a positive value for the {field_desc}",
                )
            )
    return issues


def check_unit_vector(vector: Any, area: str, field_name: str, code: str) -> List[ValidationIssue]:
    """Check that a Vec3-like field has unit length within ``UNIT_NORM_TOLERANCE``."""
    norm = float(np.linalg.norm([vector.x, vector.y, vector.z]))
    if abs(norm - 1.0) <= UNIT_NORM_TOLERANCE:
        return []
    return [
        ValidationIssue(
            severity="error",
            code=code,
            message=not_unit_error(field_name, norm),
            location=f"{area}.{field_name}",
            suggestion="Normalise the vector before constructing the object",
        )
    ]


def check_nonzero_vector(vector: Any, area: str, field_name: str, code: str) -> List[ValidationIssue]:
    norm = float(np.linalg.norm([vector.x, vector.y, vector.z]))
    if norm > 0.0:
        return []
    return [
        ValidationIssue(
            severity="error",
            code=code,
            message=ErrorMessageBuilder.build_message("NOT_POSITIVE", field=f"|{field_name}|", value=norm),
            location=f"{area}.{field_name}",
            suggestion="Provide a non-zero direction",
        )
    ]
