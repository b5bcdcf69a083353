"""
Registry of instance rules.

A rule is a plain function ``(obj, context) -> list[ValidationIssue]``
registered for a class name with ``@instance_rule("ToroidalCoil")``; rule
modules register themselves when ``ablab.validation.rules`` is imported.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import TYPE_CHECKING, Callable, Dict, List

from .core import ValidationContext, ValidationIssue, ValidationSeverity

if TYPE_CHECKING:
    from pydantic import BaseModel

logger = logging.getLogger(__name__)

ValidationRule = Callable[["BaseModel", ValidationContext], List[ValidationIssue]]

# exceptions a crashing rule is allowed to raise; they become RULE-EXEC-001
RULE_FAILURES = (ValueError, TypeError, AttributeError, KeyError, ArithmeticError)


class ValidationRegistry:
    """Instance rules keyed by the class name they validate, in registration order."""

    def __init__(self):
        self._instance_rules: Dict[str, List[ValidationRule]] = defaultdict(list)

    def add_instance_rule(self, model_type: str, rule: ValidationRule) -> None:
        self._instance_rules[model_type].append(rule)

    def get_instance_rules(self, model_type: str) -> List[ValidationRule]:
        return list(self._instance_rules.get(model_type, ()))

    def registered_types(self) -> List[str]:
        return sorted(self._instance_rules)


validation_registry = ValidationRegistry()


def instance_rule(model_type: str):
    """Register the decorated function as a rule for ``model_type`` objects."""

    def decorator(func: ValidationRule) -> ValidationRule:
        validation_registry.add_instance_rule(model_type, func)
        return func

    return decorator


def _rule_failure(rule_name: str, model_type: str, exc: Exception) -> ValidationIssue:
    return ValidationIssue(
        severity=ValidationSeverity.ERROR.value,
        code="RULE-EXEC-001",
        message=f"Validation rule execution failed: {exc}\nRule: {rule_name}",
        location=model_type,
    )


def execute_validation_rules(obj: "BaseModel", context: ValidationContext) -> List[ValidationIssue]:
    """
    Run every rule registered for ``type(obj).__name__`` and collect the issues.

    A rule that raises one of ``RULE_FAILURES`` is logged with its traceback
    and reported as a RULE-EXEC-001 error instead of propagating.
    """
    model_type = type(obj).__name__
    issues: List[ValidationIssue] = []
    for rule in validation_registry.get_instance_rules(model_type):
        rule_name = getattr(rule, "__name__", repr(rule))
        try:
            issues.extend(rule(obj, context))
        except RULE_FAILURES as exc:
            logger.error("validation rule %s failed on %s: %s", rule_name, model_type, exc, exc_info=True)
            issues.append(_rule_failure(rule_name, model_type, exc))
    return issues
