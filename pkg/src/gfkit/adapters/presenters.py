"""Presenters – render use-case responses as text, JSON or series files.

Every renderer returns a string; the CLI decides where it goes.  Text output
walks the same dictionary as the JSON document, key for key, so either form
can be diffed against the other.
"""

from __future__ import annotations

import io
import json
from typing import Any

from rich.console import Console
from rich.table import Table

from gfkit.application.use_cases.corpus import ListSuitesResponse, RunSuitesResponse
from gfkit.domain.errors import UsageError
from gfkit.infrastructure.loaders import dump_series

TABLE_WIDTH = 120


def _json_out(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, list):
        return "(" + ", ".join(_scalar(v) for v in value) + ")"
    return str(value)


def _text_lines(data: dict[str, Any], depth: int = 0) -> list[str]:
    pad = "  " * depth
    lines: list[str] = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_text_lines(value, depth + 1))
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  -")
                lines.extend(_text_lines(item, depth + 2))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ", ".join(_scalar(v) for v in value))
        elif isinstance(value, str) and "\n" in value:
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {row}" for row in value.splitlines())
        else:
            lines.append(f"{pad}{key}: {_scalar(value)}")
    return lines


def _recording_console() -> Console:
    return Console(record=True, width=TABLE_WIDTH, color_system=None, file=io.StringIO())


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------
def _suite_list_text(resp: ListSuitesResponse) -> str:
    console = _recording_console()
    table = Table(title="Corpus suites")
    table.add_column("Suite", style="cyan")
    for name in resp.names:
        table.add_row(name)
    console.print(table)
    return console.export_text()


def _suite_report_text(resp: RunSuitesResponse) -> str:
    console = _recording_console()
    table = Table(title="Corpus report", show_lines=True)
    table.add_column("Suite", style="cyan")
    table.add_column("Check")
    table.add_column("Expected")
    table.add_column("Computed")
    table.add_column("Result")
    for report in resp.reports:
        for check in report.checks:
            status = "[green]PASS[/green]" if check.passed else "[red]FAIL[/red]"
            table.add_row(report.suite, check.description, check.expected, check.computed, status)
    console.print(table)
    passed = sum(1 for r in resp.reports if r.passed)
    console.print(f"{passed}/{len(resp.reports)} suites passed, {resp.checks_total} checks")
    if resp.include_timing:
        for report in resp.reports:
            console.print(f"  {report.suite}: {report.timing:.3f}s")
    return console.export_text()


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------
def render(response: Any, fmt: str) -> str:
    """The output document for *response* in format *fmt* (text, json or series)."""
    if isinstance(response, str):
        return response if response.endswith("\n") else response + "\n"
    if fmt == "json":
        return _json_out(response.to_dict())
    if fmt == "series":
        series = getattr(response, "series", None)
        if series is None:
            raise UsageError("--format series needs a command whose result is a single series")
        return dump_series(series)
    if fmt != "text":
        raise UsageError(f"unknown output format {fmt!r}")
    if isinstance(response, ListSuitesResponse):
        return _suite_list_text(response)
    if isinstance(response, RunSuitesResponse):
        return _suite_report_text(response)
    return "\n".join(_text_lines(response.to_dict())) + "\n"
