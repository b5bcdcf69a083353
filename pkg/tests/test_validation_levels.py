"""
Test validation levels and the rule framework shared by every domain type.

The global level decides whether an issue raises (errors at NORMAL, errors
and warnings at STRICT) or is ignored altogether (DISABLED).
"""

import logging

import pytest
from pydantic import ValidationError

from ablab.core.base import DomainModel
from ablab.core.vectors import Disk, Vec3
from ablab.sources.coil import ToroidalCoil
from ablab.sources.loop import CurrentLoop
from ablab.validation import (
    ABLabValidationError,
    ErrorMessageBuilder,
    ValidationIssue,
    ValidationLevel,
    ValidationSeverity,
    get_validation_level,
    instance_rule,
    set_validation_level,
    validation_config,
    validation_level,
    validation_registry,
)
from ablab.validation.validation_utils import check_nonzero_vector, check_positive_values, check_unit_vector


class RuleSubject(DomainModel):
    value: float = 1.0


@instance_rule("RuleSubject")
def crashing_rule(subject, context):
    if subject.value < 0:
        raise ZeroDivisionError("negative value")
    return []


class TestValidationLevels:
    """Test all validation levels: disabled, normal, strict"""

    def test_default_level(self):
        assert get_validation_level() == ValidationLevel.NORMAL
        assert validation_config.enabled

    def test_disabled_validation_level(self):
        """Test that 'disabled' validation level skips every rule"""
        set_validation_level(ValidationLevel.DISABLED)
        assert not validation_config.enabled
        loop = CurrentLoop(unit_normal=Vec3(z=2.0))
        assert loop.unit_normal.z == 2.0

    def test_radius_constraints_hold_when_disabled(self):
        """Test that positive radii are enforced by the fields, independent of the level"""
        set_validation_level(ValidationLevel.DISABLED)
        with pytest.raises(ValidationError, match="greater than 0"):
            CurrentLoop(radius=0.0)
        with pytest.raises(ValidationError, match="greater than 0"):
            Disk(center=Vec3(), unit_normal=Vec3(z=1.0), radius=0.0)
        with pytest.raises(ValidationError, match="greater than 0"):
            ToroidalCoil(major_radius=1.0, minor_radius=0.0, loop_count=12)

    def test_normal_validation_raises_errors(self):
        with pytest.raises(ABLabValidationError, match=r"\[LOOP-NORM-001\] unit_normal must have unit length \(\|n\| = 2\)"):
            CurrentLoop(unit_normal=Vec3(z=2.0))

    def test_normal_validation_logs_warnings(self, caplog):
        """Test that 'normal' validation logs warnings without raising"""
        with caplog.at_level(logging.WARNING, logger="ablab.validation.core"):
            coil = ToroidalCoil(major_radius=1.0, minor_radius=0.2, loop_count=12)
        assert coil.minor_radius == 0.2
        assert "COIL-GEOM-003 at COIL.minor_radius" in caplog.text

    def test_strict_validation_raises_warnings(self):
        """Test that 'strict' validation turns warnings into errors"""
        set_validation_level(ValidationLevel.STRICT)
        with pytest.raises(ABLabValidationError) as exc_info:
            ToroidalCoil(major_radius=1.0, minor_radius=0.2, loop_count=12)
        assert exc_info.value.code == "COIL-GEOM-003"
        assert exc_info.value.severity == ValidationSeverity.WARNING

    def test_level_from_string(self):
        set_validation_level("strict")
        assert get_validation_level() == ValidationLevel.STRICT
        with pytest.raises(ValueError):
            set_validation_level("lenient")

    def test_scoped_level_is_restored(self):
        with validation_level("disabled") as level:
            assert level == ValidationLevel.DISABLED
            assert CurrentLoop(unit_normal=Vec3(z=2.0)).unit_normal.z == 2.0
        assert get_validation_level() == ValidationLevel.NORMAL
        with pytest.raises(ABLabValidationError):
            with validation_level(ValidationLevel.STRICT):
                ToroidalCoil(major_radius=1.0, minor_radius=0.2, loop_count=12)
        assert get_validation_level() == ValidationLevel.NORMAL

    @pytest.mark.parametrize(
        "level, severity, raises",
        [
            (ValidationLevel.DISABLED, ValidationSeverity.ERROR, False),
            (ValidationLevel.NORMAL, ValidationSeverity.ERROR, True),
            (ValidationLevel.NORMAL, ValidationSeverity.WARNING, False),
            (ValidationLevel.STRICT, ValidationSeverity.WARNING, True),
            (ValidationLevel.STRICT, ValidationSeverity.INFO, False),
        ],
    )
    def test_should_raise_for_severity(self, level, severity, raises):
        set_validation_level(level)
        assert validation_config.should_raise_for_severity(severity) is raises


class TestValidationError:
    """Tests for the attributes carried by ABLabValidationError."""

    def test_attributes(self):
        with pytest.raises(ABLabValidationError) as exc_info:
            CurrentLoop(unit_normal=Vec3(z=2.0))
        error = exc_info.value
        assert isinstance(error, ValueError)
        assert error.code == "LOOP-NORM-001"
        assert error.location == "LOOP.unit_normal"
        assert error.severity == ValidationSeverity.ERROR
        assert error.suggestion
        assert [issue.code for issue in error.validation_issues] == ["LOOP-NORM-001"]

    def test_from_issues_prefers_errors(self):
        issues = [
            ValidationIssue(severity="warning", code="W-1", message="thick", location="A"),
            ValidationIssue(severity="error", code="E-1", message="broken", location="B"),
        ]
        error = ABLabValidationError.from_validation_issues(issues)
        assert error.code == "E-1"
        assert str(error) == "Validation failed with 2 issue(s): broken"
        assert len(error.validation_issues) == 2

    def test_crashing_rule_becomes_issue(self, caplog):
        """Test that an exception inside a rule is reported as RULE-EXEC-001"""
        assert RuleSubject(value=1.0).value == 1.0
        with caplog.at_level(logging.ERROR, logger="ablab.validation.rule_system"):
            with pytest.raises(ABLabValidationError, match="RULE-EXEC-001") as exc_info:
                RuleSubject(value=-1.0)
        assert exc_info.value.location == "RuleSubject"
        assert "crashing_rule" in str(exc_info.value)
        assert "negative value" in caplog.text

    def test_registry_lists_domain_types(self):
        registered = validation_registry.registered_types()
        for name in ("CurrentLoop", "ToroidalCoil", "InertFluxRing", "RuleSubject"):
            assert name in registered


class TestValidationUtils:
    """Tests for the helpers shared by the rule files."""

    def test_positive_values(self):
        loop = CurrentLoop.model_construct(radius=0.0, current=1.0)
        issues = check_positive_values(loop, "LOOP", {"radius": "loop radius", "current": "current"}, "LOOP-POS-001")
        assert [(i.code, i.location) for i in issues] == [("LOOP-POS-001", "LOOP.radius")]
        assert issues[0].suggestion == "Use a positive value for the loop radius"

    def test_unit_vector(self):
        assert check_unit_vector(Vec3(x=1.0), "DISK", "unit_normal", "DISK-NORM-001") == []
        (issue,) = check_unit_vector(Vec3(x=0.5), "DISK", "unit_normal", "DISK-NORM-001")
        assert issue.message == "unit_normal must have unit length (|n| = 0.5)"

    def test_nonzero_vector(self):
        assert check_nonzero_vector(Vec3(y=3.0), "COIL", "axis", "COIL-AXIS-001") == []
        (issue,) = check_nonzero_vector(Vec3(), "COIL", "axis", "COIL-AXIS-001")
        assert issue.location == "COIL.axis"

    def test_message_builder(self):
        assert ErrorMessageBuilder.build_message("NOT_POSITIVE", field="radius", value=-1.0) == (
            "radius must be positive, got -1.0"
        )
        assert ErrorMessageBuilder.build_message("NOT_POSITIVE", field="radius") == (
            "NOT_POSITIVE: {field} must be positive, got {value} (missing 'value')"
        )
        with pytest.raises(KeyError, match="NO_SUCH_KEY"):
            ErrorMessageBuilder.get_template("NO_SUCH_KEY")
