"""
Severity levels, the global validation switch and the issue type every
rule returns.

An issue raises or is logged the moment it is added to a context: at
NORMAL only errors raise, at STRICT warnings raise too, and DISABLED skips
rule execution altogether (see ``DomainModel.model_post_init``).
"""

from __future__ import annotations

import logging
from contextlib import contextmanager
from enum import Enum
from typing import Iterator, List, Optional, Union

from pydantic import BaseModel, PrivateAttr

logger = logging.getLogger(__name__)


class ValidationSeverity(Enum):
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


class ValidationLevel(Enum):
    """How strictly ablab domain objects are checked on construction."""

    DISABLED = "disabled"
    NORMAL = "normal"
    STRICT = "strict"


_RAISING = {
    ValidationLevel.DISABLED: frozenset(),
    ValidationLevel.NORMAL: frozenset({ValidationSeverity.ERROR}),
    ValidationLevel.STRICT: frozenset({ValidationSeverity.ERROR, ValidationSeverity.WARNING}),
}


class ABLabValidationError(ValueError):
    """
    A rule violation on an ablab domain object.

    The message starts with the rule code (``[COIL-GEOM-001] ...``); the
    structured fields let callers branch on the code or show the suggestion.
    """

    def __init__(
        self,
        message: str,
        severity: ValidationSeverity = ValidationSeverity.ERROR,
        code: Optional[str] = None,
        location: Optional[str] = None,
        suggestion: Optional[str] = None,
        validation_issues: Optional[List["ValidationIssue"]] = None,
    ):
        super().__init__(message)
        self.severity = severity
        self.code = code
        self.location = location
        self.suggestion = suggestion
        self.validation_issues = validation_issues or []

    @classmethod
    def from_validation_issue(cls, issue: "ValidationIssue") -> "ABLabValidationError":
        return cls(
            message=f"[{issue.code}] {issue.message}",
            severity=issue.severity_level,
            code=issue.code,
            location=issue.location,
            suggestion=issue.suggestion,
            validation_issues=[issue],
        )

    @classmethod
    def from_validation_issues(cls, issues: List["ValidationIssue"]) -> "ABLabValidationError":
        """Summarise several issues; the first error (else the first issue) supplies code and location."""
        if not issues:
            return cls("No validation issues provided")
        main = next((i for i in issues if i.severity_level is ValidationSeverity.ERROR), issues[0])
        return cls(
            message=f"Validation failed with {len(issues)} issue(s): {main.message}",
            severity=main.severity_level,
            code=main.code,
            location=main.location,
            suggestion=main.suggestion,
            validation_issues=list(issues),
        )


class ValidationConfig:
    """Process-wide validation level (NORMAL unless changed)."""

    def __init__(self, level: ValidationLevel = ValidationLevel.NORMAL):
        self._level = level

    @property
    def level(self) -> ValidationLevel:
        return self._level

    @level.setter
    def level(self, value: ValidationLevel) -> None:
        self._level = value

    @property
    def enabled(self) -> bool:
        return self._level is not ValidationLevel.DISABLED

    def should_raise_for_severity(self, severity: ValidationSeverity) -> bool:
        return severity in _RAISING[self._level]


validation_config = ValidationConfig()


class ValidationIssue(BaseModel):
    """One finding of a rule: ``code`` like ``LOOP-NORM-001``, ``location`` like ``LOOP.unit_normal``."""

    severity: str
    code: str
    message: str
    location: str
    suggestion: Optional[str] = None

    @property
    def severity_level(self) -> ValidationSeverity:
        return ValidationSeverity(self.severity)

    def describe(self) -> str:
        return f"{self.code} at {self.location}: {self.message}"

    def raise_if_needed(self) -> None:
        """Raise under the current level, otherwise log warnings and infos."""
        severity = self.severity_level
        if validation_config.should_raise_for_severity(severity):
            raise ABLabValidationError.from_validation_issue(self)
        if severity is ValidationSeverity.WARNING:
            logger.warning("%s", self.describe())
        elif severity is ValidationSeverity.INFO:
            logger.info("%s", self.describe())


class ValidationContext(BaseModel):
    """Collects the issues found while one object is validated."""

    model_config = {"arbitrary_types_allowed": True}

    current_object: Optional[BaseModel] = None
    _issues: List[ValidationIssue] = PrivateAttr(default_factory=list)

    def add_issue(self, issue: ValidationIssue) -> None:
        self._issues.append(issue)
        issue.raise_if_needed()

    def get_issues(self) -> List[ValidationIssue]:
        return list(self._issues)


def set_validation_level(level: Union[ValidationLevel, str]) -> None:
    """Set the global level from the enum or its value (``"strict"``)."""
    validation_config.level = ValidationLevel(level)


def get_validation_level() -> ValidationLevel:
    return validation_config.level


@contextmanager
def validation_level(level: Union[ValidationLevel, str]) -> Iterator[ValidationLevel]:
    """Switch the global level inside a ``with`` block and restore it afterwards."""
    previous = validation_config.level
    set_validation_level(level)
    try:
        yield validation_config.level
    finally:
        validation_config.level = previous
