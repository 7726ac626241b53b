"""Application ports – abstract interfaces that infrastructure must implement.

Use cases depend only on these abstractions, never on concrete infrastructure.
"""

from __future__ import annotations

import abc
from typing import Any


# ---------------------------------------------------------------------------
# Report store
# ---------------------------------------------------------------------------
class ReportStore(abc.ABC):
    """Port: persists structured corpus reports."""

    @abc.abstractmethod
    def save_report(self, data: dict[str, Any], path: str | None = None) -> str:
        """Write *data*; return the path written."""
        ...


# ---------------------------------------------------------------------------
# Clock
# ---------------------------------------------------------------------------
class Clock(abc.ABC):
    """Port: monotonic time for suite timings (makes testing deterministic)."""

    @abc.abstractmethod
    def monotonic(self) -> float:
        ...


# ---------------------------------------------------------------------------
# Logger
# ---------------------------------------------------------------------------
class Logger(abc.ABC):
    """Port: structured logging to stderr."""

    @abc.abstractmethod
    def info(self, msg: str, **kw: Any) -> None:
        ...

    @abc.abstractmethod
    def warn(self, msg: str, **kw: Any) -> None:
        ...

    @abc.abstractmethod
    def error(self, msg: str, **kw: Any) -> None:
        ...

    @abc.abstractmethod
    def debug(self, msg: str, **kw: Any) -> None:
        ...
