from pydantic import BaseModel, ConfigDict

from ..validation.core import ValidationContext, validation_config
from ..validation.rule_system import execute_validation_rules


class DomainModel(BaseModel):
    """
    Immutable base for every ablab domain type.

    Field-level constraints are handled by pydantic; invariants that span
    several fields are registered with ``@instance_rule("<ClassName>")`` and
    run once, right after construction. Errors raise
    ``ABLabValidationError``; warnings are logged unless the global level is
    STRICT.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def model_post_init(self, __context) -> None:
        """Execute instance-level validation."""
        if validation_config.enabled:
            self._execute_instance_validation()

    def _execute_instance_validation(self) -> None:
        """Execute instance-level validation rules."""
        context = ValidationContext(current_object=self)
        issues = execute_validation_rules(self, context)

        for issue in issues:
            context.add_issue(issue)
