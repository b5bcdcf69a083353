"""
Invariant suites run by ``ablab verify``.
"""

from . import suites
from .registry import CheckOutcome, SuiteRegistry, resolve_suites, run_suites, suite, suite_registry
from .report import all_passed, render_table

SUITE_NAMES = tuple(suite_registry.names())

__all__ = [
    "CheckOutcome",
    "SuiteRegistry",
    "SUITE_NAMES",
    "suite",
    "suite_registry",
    "resolve_suites",
    "run_suites",
    "render_table",
    "all_passed",
    "suites",
]
