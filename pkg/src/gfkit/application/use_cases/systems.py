"""Use-cases: grammars, polynomial systems, catalytic equations, Lagrange inversion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from gfkit.application.ports import Logger
from gfkit.domain.catalytic import CatalyticEquation, solve_catalytic
from gfkit.domain.errors import UsageError
from gfkit.domain.polynomials import coeff_str
from gfkit.domain.series import TSeries
from gfkit.domain.systems import (
    NORMAL_FORMS,
    Cfg,
    PolySystem,
    brute_language_count,
    canonical_solution,
    grammar_to_system,
    lagrange_coeff,
    normalize_system,
)


def _solution_dict(system: PolySystem, solution: list[TSeries]) -> dict[str, list[str]]:
    return {name: s.coefficient_strings() for name, s in zip(system.unknowns, solution)}


# ---------------------------------------------------------------------------
# Grammars
# ---------------------------------------------------------------------------
@dataclass
class GrammarRequest:
    grammar: Cfg
    order: int = 10
    words: bool = False


@dataclass
class GrammarResponse:
    grammar: Cfg
    system: PolySystem
    solution: list[TSeries]
    word_counts: TSeries | None = None
    units_removed: bool = False

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "grammar": self.grammar.to_dict(),
            "system": self.system.to_dict(),
            "order": self.solution[0].order,
            "solution": _solution_dict(self.system, self.solution),
            "unit_rules_removed": self.units_removed,
        }
        if self.word_counts is not None:
            d["word_counts"] = self.word_counts.coefficient_strings()
            d["unambiguous_up_to_order"] = self.word_counts == self.solution[0].truncate(self.word_counts.order)
        return d


class SolveGrammar:
    """Grammar -> positive system -> canonical solution, optionally against word counts."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: GrammarRequest) -> GrammarResponse:
        g = request.grammar
        removed = False
        if not g.is_proper:
            self._log.info("Removing unit rules", count=len(g.unit_rules()))
            g = g.without_unit_rules()
            removed = True
        system = grammar_to_system(g)
        solution = canonical_solution(system, request.order)
        counts = None
        if request.words:
            counts = brute_language_count(g, request.order)
            if counts != solution[0]:
                self._log.warn("Derivation counts exceed word counts: the grammar is ambiguous")
        self._log.info("Grammar solved", symbols=len(g.symbols), order=request.order)
        return GrammarResponse(g, system, solution, counts, removed)


# ---------------------------------------------------------------------------
# Systems
# ---------------------------------------------------------------------------
@dataclass
class SystemRequest:
    system: PolySystem
    order: int = 10
    normalize: str | None = None


@dataclass
class SystemResponse:
    system: PolySystem
    solution: list[TSeries]
    properized: bool = False
    normalized: PolySystem | None = None
    normalized_agrees: bool | None = None

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "system": self.system.to_dict(),
            "properized": self.properized,
            "order": self.solution[0].order,
            "solution": _solution_dict(self.system, self.solution),
        }
        if self.normalized is not None:
            d["normalized"] = self.normalized.to_dict()
            d["first_component_agrees"] = self.normalized_agrees
        return d


class SolveSystem:
    """Canonical solution of a proper system, with optional normal form."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: SystemRequest) -> SystemResponse:
        s = request.system
        properized = False
        if not s.is_proper:
            self._log.info("System is not proper; substituting linear terms", reasons=len(s.improper_reasons()))
            s = s.properized()
            properized = True
        solution = canonical_solution(s, request.order)
        normalized = agrees = None
        if request.normalize is not None:
            if request.normalize not in NORMAL_FORMS:
                raise UsageError(f"unknown normal form {request.normalize!r} (one of: {', '.join(NORMAL_FORMS)})")
            normalized = normalize_system(s, request.normalize)
            first = canonical_solution(normalized, request.order)[0]
            agrees = first == solution[0]
            self._log.debug("Normal form solved", unknowns=normalized.k, agrees=agrees)
        self._log.info("System solved", unknowns=s.k, order=request.order)
        return SystemResponse(s, solution, properized, normalized, agrees)


# ---------------------------------------------------------------------------
# Catalytic equations
# ---------------------------------------------------------------------------
@dataclass
class CatalyticRequest:
    equation: CatalyticEquation
    order: int = 10


@dataclass
class CatalyticResponse:
    equation: CatalyticEquation
    at_one: TSeries
    full: TSeries

    def to_dict(self) -> dict[str, Any]:
        return {
            "equation": str(self.equation),
            "order": self.at_one.order,
            "coefficients": self.at_one.coefficient_strings(),
            "full": self.full.coefficient_strings(),
        }

    @property
    def series(self) -> TSeries:
        return self.at_one


class SolveCatalytic:
    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: CatalyticRequest) -> CatalyticResponse:
        at_one, full = solve_catalytic(request.equation, request.order)
        self._log.info("Catalytic equation solved", order=request.order)
        return CatalyticResponse(request.equation, at_one, full)


# ---------------------------------------------------------------------------
# Lagrange inversion
# ---------------------------------------------------------------------------
@dataclass
class LagrangeRequest:
    phi: TSeries
    psi: TSeries
    n: int


@dataclass
class LagrangeResponse:
    n: int
    value: Fraction

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "coefficient": coeff_str(self.value)}


class LagrangeInversion:
    """[t^n] Psi(U) where U = t Phi(U)."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: LagrangeRequest) -> LagrangeResponse:
        value = lagrange_coeff(request.phi, request.psi, request.n)
        self._log.debug("Lagrange coefficient", n=request.n)
        return LagrangeResponse(request.n, value)
