"""Use-cases: sections, Soittola evidence and dominant-singularity asymptotics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from gfkit.application.ports import Logger
from gfkit.domain.branches import BranchSolution, algebraic_asymptotics, series_roots
from gfkit.domain.errors import ComputationError, UsageError
from gfkit.domain.numeric import DEFAULT_DPS, AsymptoticEstimate
from gfkit.domain.polynomials import MPoly
from gfkit.domain.ratfun import RatFun
from gfkit.domain.rational_analysis import SoittolaReport, rational_asymptotics, section, soittola_check


# ---------------------------------------------------------------------------
# Section
# ---------------------------------------------------------------------------
@dataclass
class SectionRequest:
    function: RatFun
    r: int
    p: int


@dataclass
class SectionResponse:
    function: RatFun
    r: int
    p: int
    section: RatFun

    def to_dict(self) -> dict[str, Any]:
        return {"function": str(self.function), "r": self.r, "p": self.p, "section": str(self.section)}


class TakeSection:
    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: SectionRequest) -> SectionResponse:
        s = section(request.function, request.r, request.p)
        self._log.info("Section reconstructed", r=request.r, p=request.p, den_degree=s.den.degree)
        return SectionResponse(request.function, request.r, request.p, s)


# ---------------------------------------------------------------------------
# Soittola evidence
# ---------------------------------------------------------------------------
@dataclass
class SoittolaRequest:
    function: RatFun
    p_max: int = 1
    precision: float = 1e-6
    dps: int = DEFAULT_DPS


@dataclass
class SoittolaResponse:
    function: RatFun
    report: SoittolaReport

    def to_dict(self) -> dict[str, Any]:
        return {"function": str(self.function), **self.report.to_dict()}


class CheckSoittola:
    """Count dominant poles of every section A_{r,p} with p <= p_max."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: SoittolaRequest) -> SoittolaResponse:
        if request.p_max < 1:
            raise UsageError("--pmax must be at least 1")
        report = soittola_check(request.function, request.p_max, request.precision, request.dps)
        self._log.info(
            "Soittola evidence collected",
            sections=len(report.entries),
            unique_dominant=report.unique_dominant,
        )
        return SoittolaResponse(request.function, report)


# ---------------------------------------------------------------------------
# Asymptotics
# ---------------------------------------------------------------------------
@dataclass
class AsymptoticsRequest:
    rational: RatFun | None = None
    equation: MPoly | None = None
    n_fit: int = 500
    branch: Fraction | None = None
    dps: int = DEFAULT_DPS


@dataclass
class AsymptoticsResponse:
    subject: str
    estimate: AsymptoticEstimate
    branch: Fraction | None = None

    def to_dict(self) -> dict[str, Any]:
        d = {"subject": self.subject, **self.estimate.to_dict()}
        if self.branch is not None:
            d["branch_constant_term"] = str(self.branch)
        return d


def _pick_branch(branches: tuple[BranchSolution, ...], wanted: Fraction | None) -> BranchSolution:
    if wanted is not None:
        for b in branches:
            if b.constant_term == wanted:
                return b
        raise ComputationError(f"no power-series branch with constant term {wanted}")
    for b in branches:
        coeffs = b.series.scalars()
        if all(c >= 0 for c in coeffs) and any(coeffs):
            return b
    raise ComputationError("no branch with non-negative coefficients; pass --branch")


class EstimateAsymptotics:
    """a_n ~ kappa rho^-n n^d for a rational function or a branch of P(t, a) = 0."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: AsymptoticsRequest) -> AsymptoticsResponse:
        if (request.rational is None) == (request.equation is None):
            raise UsageError("give exactly one of a rational function or an equation")
        if request.rational is not None:
            estimate = rational_asymptotics(request.rational, request.dps)
            self._log.info("Dominant pole located", d=estimate.d)
            return AsymptoticsResponse(str(request.rational), estimate)
        report = series_roots(request.equation, request.n_fit)
        branch = _pick_branch(report.branches, request.branch)
        self._log.debug("Branch lifted", constant_term=str(branch.constant_term), order=request.n_fit)
        estimate = algebraic_asymptotics(request.equation, branch, request.n_fit, request.dps)
        self._log.info("Exponent fitted", d=round(estimate.d, 4))
        return AsymptoticsResponse(str(request.equation), estimate, branch.constant_term)
