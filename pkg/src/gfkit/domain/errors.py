"""Domain errors.

Two families matter to callers: ``UsageError`` (bad input, exit status 2) and
``ComputationError`` (the input was fine but the mathematics refused, exit
status 1). ``SuiteFailure`` is raised by corpus runs that completed with at
least one failing check (exit status 3).
"""

from __future__ import annotations

from typing import Any


class GfkitError(Exception):
    """Base class for every error gfkit raises on purpose."""


# ---------------------------------------------------------------------------
# Usage
# ---------------------------------------------------------------------------
class UsageError(GfkitError):
    """The request itself is malformed."""


class InputFormatError(UsageError):
    """An input file or expression could not be parsed."""

    def __init__(self, message: str, *, source: str = "<input>", line: int = 1, column: int = 1) -> None:
        self.message = message
        self.source = source
        self.line = line
        self.column = column
        super().__init__(f"{source}:{line}:{column}: {message}")


class ConfigError(UsageError):
    """An environment or flag value is invalid."""


# ---------------------------------------------------------------------------
# Computation
# ---------------------------------------------------------------------------
class ComputationError(GfkitError, ValueError):
    """The operation's precondition does not hold for this (well-formed) input."""


class NotInvertibleError(ComputationError):
    pass


class ImproperSystemError(ComputationError):
    pass


class GuardExceededError(ComputationError):
    pass


class ReconstructionError(ComputationError):
    pass


class UnresolvedRootsError(ComputationError):
    pass


class DominanceError(ComputationError):
    pass


class InsufficientDataError(ComputationError):
    pass


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------
class SuiteFailure(GfkitError):
    """One or more corpus checks failed; ``reports`` holds every report of the run.

    ``response`` is the full run result, still rendered as the output document.
    """

    def __init__(self, message: str, reports: list[Any] | None = None, response: Any = None) -> None:
        super().__init__(message)
        self.reports = list(reports or [])
        self.response = response
