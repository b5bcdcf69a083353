from __future__ import annotations

import json
import logging
from importlib import resources
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from ..core.errors import ScenarioError
from .schema import Scenario

logger = logging.getLogger(__name__)

FIXTURE_PACKAGE = "ablab.scenario"
FIXTURE_DIR = "fixtures"


def bundled_scenarios() -> list[str]:
    """Names of the scenarios shipped with the package."""
    root = resources.files(FIXTURE_PACKAGE) / FIXTURE_DIR
    return sorted(entry.name.removesuffix(".json") for entry in root.iterdir() if entry.name.endswith(".json"))


def _read(reference: Union[str, Path]) -> tuple[str, str]:
    path = Path(reference)
    if path.is_file():
        return str(path), path.read_text(encoding="utf-8")
    name = str(reference).removesuffix(".json")
    if name in bundled_scenarios():
        fixture = resources.files(FIXTURE_PACKAGE) / FIXTURE_DIR / f"{name}.json"
        return f"<bundled {name}>", fixture.read_text(encoding="utf-8")
    raise ScenarioError(
        f"scenario '{reference}' is neither a file nor a bundled scenario ({', '.join(bundled_scenarios())})"
    )


def parse_scenario(text: str, origin: str = "<string>") -> Scenario:
    """
    Parse and validate scenario JSON.

    Raises:
        ScenarioError: malformed JSON (with line and column) or a schema or
            domain violation (naming the offending field).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{origin}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    try:
        scenario = Scenario.model_validate(data)
    except ValidationError as exc:
        raise ScenarioError(f"{origin}: {exc}") from exc
    logger.debug("loaded scenario %r (%s) from %s", scenario.name, scenario.kind, origin)
    return scenario


def load_scenario(reference: Union[str, Path]) -> Scenario:
    """Load a scenario from a JSON file or by bundled name (``tonomura_inert``)."""
    origin, text = _read(reference)
    return parse_scenario(text, origin)


def dump_scenario(scenario: Scenario) -> str:
    """Canonical JSON text of ``scenario``; ``parse_scenario`` reads it back unchanged."""
    return scenario.model_dump_json(indent=2) + "\n"
