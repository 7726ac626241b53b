"""Use-case: GuessRelation – rational or algebraic conjectures from initial coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from gfkit.application.ports import Logger
from gfkit.domain.errors import UsageError
from gfkit.domain.guessing import GuessResult, guess_algebraic, guess_rational

GUESS_KINDS = ("rational", "algebraic")


@dataclass
class GuessRequest:
    kind: str
    coeffs: list[Fraction]
    degrees: tuple[int, int] = (4, 4)


@dataclass
class GuessResponse:
    kind: str
    degrees: tuple[int, int]
    result: GuessResult | None

    @property
    def found(self) -> bool:
        return self.result is not None

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"kind": self.kind, "max_degrees": list(self.degrees), "found": self.found}
        if self.result is not None:
            d.update(self.result.to_dict())
        return d


class GuessRelation:
    """Guess inside the degree bounds; every supplied coefficient must satisfy the guess."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: GuessRequest) -> GuessResponse:
        if request.kind not in GUESS_KINDS:
            raise UsageError(f"unknown guess kind {request.kind!r} (one of: {', '.join(GUESS_KINDS)})")
        d, e = request.degrees
        if d < 0 or e < 0:
            raise UsageError("degree bounds must be non-negative")
        if request.kind == "rational":
            result = guess_rational(request.coeffs, d, e)
        else:
            if e < 1:
                raise UsageError("an algebraic guess needs degree at least 1 in a")
            result = guess_algebraic(request.coeffs, d, e)
        if result is None:
            self._log.warn("No relation fits the data", kind=request.kind, degrees=f"{d},{e}")
        else:
            self._log.info("Relation guessed", used=result.used, validated=result.validated)
        return GuessResponse(request.kind, (d, e), result)
