"""Message templates shared by the rule files."""

import logging

logger = logging.getLogger(__name__)


class ErrorMessageBuilder:
    """
    Named ``str.format`` templates for rule messages.

    Example:
        >>> ErrorMessageBuilder.build_message("NOT_POSITIVE", field="radius", value=-1.0)
        'radius must be positive, got -1.0'
    """

    TEMPLATES = {
        "NOT_POSITIVE": "{field} must be positive, got {value}",
        "NOT_UNIT": "{field} must have unit length (|n| = {norm:.15g})",
        "INVALID_ORDER": "{field} must be {relation} {other} ({value} vs {other_value})",
        "TOO_FEW": "{field} needs at least {minimum} entries, found {actual}",
        "NOT_MONOTONIC": "{field} must be strictly increasing (violated at index {index})",
        "NOT_CLOSED": "closed {field} must end where it starts (gap {gap:.3e})",
        "INCONSISTENT": "{field} disagrees with {reference} by {deviation:.1%} at index {index}",
        "ASSUMPTION": "{field} = {value:.3g} exceeds the {limit:.3g} limit assumed by {model}",
        "OUT_OF_REGIME": "{field} = {value:.3g} must stay below {limit:.3g}",
    }

    @classmethod
    def get_template(cls, key: str) -> str:
        try:
            return cls.TEMPLATES[key]
        except KeyError:
            raise KeyError(f"no message template named {key!r}") from None

    @classmethod
    def build_message(cls, template_key: str, **kwargs) -> str:
        """
        Fill the named template.

        A placeholder missing from ``kwargs`` leaves the raw template in the
        message, so the issue is still reported.
        """
        template = cls.get_template(template_key)
        try:
            return template.format(**kwargs)
        except (KeyError, IndexError) as exc:
            logger.debug("template %s is missing %s", template_key, exc)
            return f"{template_key}: {template} (missing {exc})"


def not_positive_error(field: str, value: float) -> str:
    return ErrorMessageBuilder.build_message("NOT_POSITIVE", field=field, value=value)


def not_unit_error(field: str, norm: float) -> str:
    return ErrorMessageBuilder.build_message("NOT_UNIT", field=field, norm=norm)
