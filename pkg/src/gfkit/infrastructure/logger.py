"""Infrastructure: stderr logger."""

from __future__ import annotations

import sys
from typing import Any, TextIO

from gfkit.application.ports import Logger as LoggerPort

MAX_VALUE_CHARS = 60


def _short(value: Any) -> str:
    """One-line rendering; sequences longer than the limit collapse to their length."""
    if isinstance(value, (list, tuple)):
        text = "[" + ", ".join(str(v) for v in value) + "]"
        return text if len(text) <= MAX_VALUE_CHARS else f"[{len(value)} items]"
    text = " ".join(str(value).split())
    return text if len(text) <= MAX_VALUE_CHARS else text[: MAX_VALUE_CHARS - 3] + "..."


class ConsoleLogger(LoggerPort):
    """Writes ``[LEVEL] msg (k=v ...)`` lines to stderr; stdout is left to the output document."""

    def __init__(self, verbose: bool = False, stream: TextIO | None = None) -> None:
        self._verbose = verbose
        self._stream = stream

    def _emit(self, level: str, msg: str, kw: dict[str, Any]) -> None:
        line = f"[{level}] {msg}"
        if kw:
            line += " (" + " ".join(f"{k}={_short(v)}" for k, v in kw.items()) + ")"
        print(line, file=self._stream or sys.stderr)

    def info(self, msg: str, **kw: Any) -> None:
        self._emit("INFO", msg, kw)

    def warn(self, msg: str, **kw: Any) -> None:
        self._emit("WARN", msg, kw)

    def error(self, msg: str, **kw: Any) -> None:
        self._emit("ERROR", msg, kw)

    def debug(self, msg: str, **kw: Any) -> None:
        if self._verbose:
            self._emit("DEBUG", msg, kw)
