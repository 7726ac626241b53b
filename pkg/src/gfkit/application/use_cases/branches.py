"""Use-cases: FindRoots and VerifyBranch."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from gfkit.application.ports import Logger
from gfkit.domain.branches import BRANCH_VAR, BranchReport, series_roots, verify_algebraic
from gfkit.domain.polynomials import MPoly
from gfkit.domain.series import TSeries


@dataclass
class RootsRequest:
    equation: MPoly
    order: int = 10
    var: str = BRANCH_VAR


@dataclass
class RootsResponse:
    equation: MPoly
    report: BranchReport

    def to_dict(self) -> dict[str, Any]:
        return {"equation": str(self.equation), **self.report.to_dict()}


class FindRoots:
    """Every power-series branch of P(t, a) = 0 with a rational simple constant term."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: RootsRequest) -> RootsResponse:
        report = series_roots(request.equation, request.order, request.var)
        self._log.info(f"Lifted {len(report.branches)} branch(es)", order=request.order)
        if report.ramified:
            self._log.warn("Multiple roots at t = 0 were not lifted", count=len(report.ramified))
        if report.irrational_degree:
            self._log.debug("Irrational constant terms skipped", degree=report.irrational_degree)
        return RootsResponse(request.equation, report)


@dataclass
class VerifyRequest:
    series: TSeries
    equation: MPoly
    var: str = BRANCH_VAR


@dataclass
class VerifyResponse:
    order: int
    verified_to: int

    @property
    def complete(self) -> bool:
        return self.verified_to == self.order

    def to_dict(self) -> dict[str, Any]:
        return {"order": self.order, "verified_to": self.verified_to, "complete": self.complete}


class VerifyBranch:
    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: VerifyRequest) -> VerifyResponse:
        m = verify_algebraic(request.series, request.equation, request.var)
        if m < request.series.order:
            self._log.warn("Series leaves a nonzero residual", first_bad=m + 1)
        return VerifyResponse(request.series.order, m)
