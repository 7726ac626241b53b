"""Use-cases: series arithmetic, rational expansion, determinants, elimination."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from gfkit.application.ports import Logger
from gfkit.domain.errors import UsageError
from gfkit.domain.linalg import det_bareiss, discriminant, resultant
from gfkit.domain.polynomials import MPoly
from gfkit.domain.ratfun import RatFun, ratfun_expand
from gfkit.domain.series import SERIES_OPS, TSeries, series_arith

BINARY_OPS = ("add", "sub", "mul", "compose")


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------
@dataclass
class SeriesRequest:
    op: str
    a: TSeries
    b: TSeries | None = None


@dataclass
class SeriesResponse:
    op: str
    series: TSeries

    def to_dict(self) -> dict[str, Any]:
        return {
            "operation": self.op,
            "order": self.series.order,
            "coefficients": self.series.coefficient_strings(),
        }


class SeriesArithmetic:
    """Apply one truncated-series operation."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: SeriesRequest) -> SeriesResponse:
        if request.op not in SERIES_OPS:
            raise UsageError(f"unknown series operation {request.op!r} (one of: {', '.join(SERIES_OPS)})")
        if (request.op in BINARY_OPS) != (request.b is not None):
            raise UsageError(f"series {request.op} takes {'two operands' if request.op in BINARY_OPS else 'one operand'}")
        result = series_arith(request.op, request.a, request.b)
        self._log.info(f"Series {request.op}", order=result.order)
        return SeriesResponse(op=request.op, series=result)


# ---------------------------------------------------------------------------
# Rational expansion
# ---------------------------------------------------------------------------
@dataclass
class ExpandRequest:
    function: RatFun
    order: int


@dataclass
class ExpandResponse:
    function: RatFun
    series: TSeries

    def to_dict(self) -> dict[str, Any]:
        return {
            "function": str(self.function),
            "order": self.series.order,
            "coefficients": self.series.coefficient_strings(),
        }


class ExpandRationalFunction:
    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: ExpandRequest) -> ExpandResponse:
        series = ratfun_expand(request.function, request.order)
        self._log.info(
            "Expanded rational function",
            order=request.order,
            den_degree=request.function.den.degree,
        )
        return ExpandResponse(function=request.function, series=series)


# ---------------------------------------------------------------------------
# Determinant
# ---------------------------------------------------------------------------
@dataclass
class DeterminantRequest:
    matrix: list[list[MPoly]]


@dataclass
class DeterminantResponse:
    size: int
    determinant: MPoly

    def to_dict(self) -> dict[str, Any]:
        return {"size": self.size, "determinant": str(self.determinant)}


class Determinant:
    """Fraction-free determinant of a square polynomial matrix."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: DeterminantRequest) -> DeterminantResponse:
        det = det_bareiss(request.matrix)
        self._log.debug("Bareiss elimination done", size=len(request.matrix))
        return DeterminantResponse(size=len(request.matrix), determinant=det)


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------
@dataclass
class EliminateRequest:
    p: MPoly
    q: MPoly | None = None
    var: str = "a"


@dataclass
class EliminateResponse:
    kind: str
    var: str
    value: MPoly

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "variable": self.var, "result": str(self.value)}


class Eliminate:
    """Resultant of two polynomials, or the discriminant of one, in *var*."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: EliminateRequest) -> EliminateResponse:
        if request.q is None:
            value = discriminant(request.p, request.var)
            kind = "discriminant"
        else:
            value = resultant(request.p, request.q, request.var)
            kind = "resultant"
        self._log.info(f"Computed {kind}", var=request.var)
        return EliminateResponse(kind=kind, var=request.var, value=value)
