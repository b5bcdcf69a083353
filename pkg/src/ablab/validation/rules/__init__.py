"""Validation rules module - imports all rule files to register them."""

# Import all validation rule files to ensure they're registered
from . import geometry_rules
from . import source_rules
from . import electron_rules
from . import beam_rules
from . import phase_rules
from . import backreaction_rules

__all__ = [
    "geometry_rules",
    "source_rules",
    "electron_rules",
    "beam_rules",
    "phase_rules",
    "backreaction_rules",
]
