"""Use-cases: AnalysePoset and CountCone."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from gfkit.application.ports import Logger
from gfkit.domain.posets import (
    HalfspaceSystem,
    NaturalPoset,
    Permutation,
    PPartition,
    brute_p_partitions,
    compatible_extension,
    cone_points_bruteforce,
    linear_extensions,
    p_partition_gf,
    sigma_data,
)
from gfkit.domain.ratfun import RatFun, ratfun_expand
from gfkit.domain.series import TSeries


def _word(sigma: Permutation) -> str:
    return "".join(map(str, sigma)) if len(sigma) < 10 else " ".join(map(str, sigma))


# ---------------------------------------------------------------------------
# P-partitions
# ---------------------------------------------------------------------------
@dataclass
class PosetRequest:
    poset: NaturalPoset
    order: int = 10
    classify: PPartition | None = None


@dataclass
class ExtensionRow:
    sigma: Permutation
    e: int
    minimal: PPartition

    def to_dict(self) -> dict[str, Any]:
        return {"sigma": _word(self.sigma), "e": self.e, "minimal_partition": list(self.minimal.parts)}


@dataclass
class PosetResponse:
    poset: NaturalPoset
    extensions: list[ExtensionRow]
    function: RatFun
    series: TSeries
    brute: TSeries
    classified: Permutation | None = None

    @property
    def agrees(self) -> bool:
        return self.series == self.brute

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "poset": self.poset.to_dict(),
            "extensions": [row.to_dict() for row in self.extensions],
            "function": str(self.function),
            "order": self.series.order,
            "coefficients": self.series.coefficient_strings(),
            "brute_force_agrees": self.agrees,
        }
        if self.classified is not None:
            d["compatible_extension"] = _word(self.classified)
        return d


class AnalysePoset:
    """Linear extensions, the P-partition generating function and its brute-force check."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: PosetRequest) -> PosetResponse:
        poset = request.poset
        rows = []
        for sigma in sorted(linear_extensions(poset)):
            e, lam = sigma_data(sigma, poset.k)
            rows.append(ExtensionRow(sigma, e, lam))
        self._log.info(f"Found {len(rows)} linear extensions", k=poset.k)
        gf = p_partition_gf(poset)
        series = ratfun_expand(gf, request.order)
        brute = brute_p_partitions(poset, request.order)
        if series != brute:
            self._log.warn("P-partition count disagrees with the brute-force enumeration", order=request.order)
        classified = None
        if request.classify is not None:
            classified = compatible_extension(poset, request.classify)
        return PosetResponse(poset, rows, gf, series, brute, classified)


# ---------------------------------------------------------------------------
# Cones
# ---------------------------------------------------------------------------
@dataclass
class ConeRequest:
    system: HalfspaceSystem
    order: int = 10


@dataclass
class ConeResponse:
    system: HalfspaceSystem
    series: TSeries

    def to_dict(self) -> dict[str, Any]:
        return {
            "dimension": self.system.m,
            "constraints": [list(r) for r in self.system.rows],
            "order": self.series.order,
            "coefficients": self.series.coefficient_strings(),
        }


class CountCone:
    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: ConeRequest) -> ConeResponse:
        series = cone_points_bruteforce(request.system, request.order)
        self._log.info("Cone points counted", m=request.system.m, order=request.order)
        return ConeResponse(request.system, series)
