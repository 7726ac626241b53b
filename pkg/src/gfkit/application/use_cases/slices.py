"""Use-case: TakeSlice – coefficient slices and diagonals of bivariate rational functions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from gfkit.application.ports import Logger
from gfkit.domain.errors import UsageError
from gfkit.domain.laurent import SLICE_MODES, BiRatFun, laurent_slice
from gfkit.domain.series import TSeries


@dataclass
class SliceRequest:
    function: BiRatFun
    mode: str = "slice"
    k: int = 0
    order: int = 10


@dataclass
class SliceResponse:
    function: BiRatFun
    mode: str
    k: int
    series: TSeries

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "function": str(self.function),
            "mode": self.mode,
            "order": self.series.order,
            "coefficients": self.series.coefficient_strings(),
        }
        if self.mode == "slice":
            d["k"] = self.k
        return d


class TakeSlice:
    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: SliceRequest) -> SliceResponse:
        if request.mode not in SLICE_MODES:
            raise UsageError(f"unknown slice mode {request.mode!r}")
        series = laurent_slice(request.function, request.k, request.order, request.mode)
        self._log.info(f"Took {request.mode}", k=request.k, order=request.order)
        return SliceResponse(request.function, request.mode, request.k, series)
