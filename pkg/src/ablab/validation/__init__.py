"""
Rule-based validation of ablab domain objects.

Importing this package registers every rule module under ``rules/``.
"""

from .core import (
    ABLabValidationError,
    ValidationConfig,
    ValidationContext,
    ValidationIssue,
    ValidationLevel,
    ValidationSeverity,
    get_validation_level,
    set_validation_level,
    validation_config,
    validation_level,
)
from .messages import ErrorMessageBuilder
from .rule_system import (
    ValidationRegistry,
    ValidationRule,
    execute_validation_rules,
    instance_rule,
    validation_registry,
)
from .rules import *  # noqa: F403

__all__ = [
    "ABLabValidationError",
    "ValidationConfig",
    "ValidationContext",
    "ValidationIssue",
    "ValidationLevel",
    "ValidationSeverity",
    "get_validation_level",
    "set_validation_level",
    "validation_config",
    "validation_level",
    "ErrorMessageBuilder",
    "ValidationRegistry",
    "ValidationRule",
    "execute_validation_rules",
    "instance_rule",
    "validation_registry",
]
