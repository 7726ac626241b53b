"""Shared test fixtures for gfkit tests."""

from __future__ import annotations

import os
from typing import Any

import pytest

from gfkit.adapters.cli import run_cli
from gfkit.application.ports import Logger

GFKIT_ENV = ("GFKIT_SCALE", "GFKIT_FORMAT", "GFKIT_VERBOSE", "GFKIT_REPORT_DIR", "GFKIT_DPS")


@pytest.fixture
def fixtures_dir():
    """Return path to the test data directory."""
    return os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture
def data_file(fixtures_dir):
    """Return a function mapping a data file name to its path."""
    return lambda name: os.path.join(fixtures_dir, name)


# ---------------------------------------------------------------------------
# Logger double
# ---------------------------------------------------------------------------
class RecordingLogger(Logger):
    """Keeps every call as (level, msg, kw)."""

    def __init__(self) -> None:
        self.records: list[tuple[str, str, dict[str, Any]]] = []

    def info(self, msg: str, **kw: Any) -> None:
        self.records.append(("info", msg, kw))

    def warn(self, msg: str, **kw: Any) -> None:
        self.records.append(("warn", msg, kw))

    def error(self, msg: str, **kw: Any) -> None:
        self.records.append(("error", msg, kw))

    def debug(self, msg: str, **kw: Any) -> None:
        self.records.append(("debug", msg, kw))

    def levels(self) -> list[str]:
        return [level for level, _, _ in self.records]


@pytest.fixture
def logger():
    return RecordingLogger()


# ---------------------------------------------------------------------------
# CLI runner
# ---------------------------------------------------------------------------
@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """No GFKIT_* variables and no .env above the working directory."""
    for name in GFKIT_ENV:
        # set first so teardown also removes values a .env file loads later
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def run(clean_env, capsys):
    """Run the CLI in-process; return (exit code, stdout, stderr)."""

    def _run(*argv: str) -> tuple[int, str, str]:
        code = 0
        try:
            run_cli(list(argv))
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 1
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
