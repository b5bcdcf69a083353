"""
Registry of verification suites.

A suite is a function ``(Scenario) -> list[CheckOutcome]`` registered with
``@suite("<name>")``. Suites run in registration order, so the outcome list
(and the rendered table) is the same on every run.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Callable, Dict, Iterable, List, Literal, Optional

from pydantic import FiniteFloat

from ..core.base import DomainModel

if TYPE_CHECKING:
    from ..scenario.schema import Scenario

logger = logging.getLogger(__name__)

Status = Literal["pass", "fail", "skip"]


class CheckOutcome(DomainModel):
    """Result of one verification check; ``value`` is compared with ``limit``."""

    suite: str
    name: str
    status: Status
    value: Optional[FiniteFloat] = None
    limit: Optional[FiniteFloat] = None
    detail: str = ""

    @classmethod
    def measure(
        cls,
        suite: str,
        name: str,
        value: float,
        limit: float,
        *,
        at_least: bool = False,
        detail: str = "",
    ) -> "CheckOutcome":
        """Pass when ``value <= limit`` (``value >= limit`` with ``at_least``)."""
        passed = value >= limit if at_least else value <= limit
        return cls(
            suite=suite,
            name=name,
            status="pass" if passed else "fail",
            value=float(value),
            limit=float(limit),
            detail=detail,
        )

    @classmethod
    def skipped(cls, suite: str, name: str, detail: str) -> "CheckOutcome":
        return cls(suite=suite, name=name, status="skip", detail=detail)

    @property
    def passed(self) -> bool:
        return self.status != "fail"


SuiteFunction = Callable[["Scenario"], List[CheckOutcome]]


class SuiteRegistry:
    """Suites keyed by name, in registration order."""

    def __init__(self):
        self._suites: Dict[str, SuiteFunction] = {}

    def add(self, name: str, func: SuiteFunction) -> None:
        if name in self._suites:
            raise ValueError(f"suite '{name}' is already registered")
        self._suites[name] = func

    def get(self, name: str) -> SuiteFunction:
        try:
            return self._suites[name]
        except KeyError:
            raise ValueError(f"unknown suite '{name}' (known: {', '.join(self.names())})") from None

    def names(self) -> List[str]:
        return list(self._suites)


suite_registry = SuiteRegistry()


def suite(name: str):
    """Decorator registering a verification suite under ``name``."""

    def decorator(func: SuiteFunction) -> SuiteFunction:
        suite_registry.add(name, func)
        return func

    return decorator


def resolve_suites(names: Optional[Iterable[str]] = None) -> List[str]:
    """Expand ``None`` or ``"all"`` to every registered suite; keep registration order."""
    requested = ["all"] if names is None else list(names)
    if "all" in requested:
        return suite_registry.names()
    for name in requested:
        suite_registry.get(name)
    return [name for name in suite_registry.names() if name in requested]


def run_suites(scenario: "Scenario", names: Optional[Iterable[str]] = None) -> List[CheckOutcome]:
    """
    Run the named suites (default: all) against ``scenario``.

    Raises:
        ValueError: an unknown suite name.
    """
    outcomes: List[CheckOutcome] = []
    for name in resolve_suites(names):
        logger.info("running suite %s on %s", name, scenario.name)
        results = suite_registry.get(name)(scenario)
        for outcome in results:
            if outcome.status == "fail":
                logger.warning("%s/%s failed (value %s, limit %s)", name, outcome.name, outcome.value, outcome.limit)
        outcomes.extend(results)
    return outcomes
