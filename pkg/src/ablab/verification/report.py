from __future__ import annotations

from typing import Optional, Sequence

from .registry import CheckOutcome

COLUMNS = ("suite", "check", "status", "value", "limit", "detail")


def _number(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.3e}"


def render_table(outcomes: Sequence[CheckOutcome]) -> str:
    """
    Fixed-width pass/fail table followed by a one-line summary.

    Values are printed with four significant digits; the same outcomes
    always render to the same text.
    """
    rows = [
        (o.suite, o.name, o.status.upper(), _number(o.value), _number(o.limit), o.detail)
        for o in outcomes
    ]
    widths = [max(len(row[i]) for row in [COLUMNS, *rows]) for i in range(len(COLUMNS) - 1)]

    def line(cells) -> str:
        padded = [cell.ljust(width) for cell, width in zip(cells, widths)]
        return "  ".join([*padded, cells[-1]]).rstrip()

    counts = {status: sum(o.status == status for o in outcomes) for status in ("pass", "fail", "skip")}
    summary = f"{counts['pass']} passed, {counts['fail']} failed, {counts['skip']} skipped"
    return "\n".join([line(COLUMNS), line(["-" * w for w in widths] + ["------"]), *map(line, rows), summary]) + "\n"


def all_passed(outcomes: Sequence[CheckOutcome]) -> bool:
    return all(o.passed for o in outcomes)
