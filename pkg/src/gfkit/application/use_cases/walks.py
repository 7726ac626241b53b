"""Use-cases: CountWalks and CountWords – rational series of digraphs and automata."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from gfkit.application.ports import Logger
from gfkit.domain.automata import Nfa, automaton_gf, determinize
from gfkit.domain.digraph import WeightedDigraph, transfer_gf, viennot_gf, viennot_terms
from gfkit.domain.errors import UsageError
from gfkit.domain.polynomials import MPoly
from gfkit.domain.ratfun import RatFun, ratfun_expand
from gfkit.domain.series import TSeries

WALK_METHODS = ("transfer", "viennot")


# ---------------------------------------------------------------------------
# Walks
# ---------------------------------------------------------------------------
@dataclass
class WalksRequest:
    graph: WeightedDigraph
    start: int
    targets: list[int]
    method: str = "transfer"
    order: int = 10


@dataclass
class WalksResponse:
    method: str
    start: int
    targets: list[int]
    function: RatFun
    series: TSeries
    denominator: MPoly | None = None
    numerators: dict[int, MPoly] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "method": self.method,
            "start": self.start,
            "targets": self.targets,
            "function": str(self.function),
            "order": self.series.order,
            "coefficients": self.series.coefficient_strings(),
        }
        if self.denominator is not None:
            d["cycle_denominator"] = str(self.denominator)
            d["path_numerators"] = {str(j): str(n) for j, n in sorted(self.numerators.items())}
        return d


class CountWalks:
    """Generating function of walks from one vertex to a target set."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: WalksRequest) -> WalksResponse:
        if request.method not in WALK_METHODS:
            raise UsageError(f"unknown method {request.method!r} (one of: {', '.join(WALK_METHODS)})")
        g = request.graph
        targets = list(g.check_targets(request.start, request.targets))
        self._log.info(
            f"Counting walks by {request.method}",
            vertices=g.vertices,
            edges=len(g.edges),
        )
        den: MPoly | None = None
        nums: dict[int, MPoly] = {}
        if request.method == "transfer":
            gf = transfer_gf(g, request.start, targets)
        else:
            den, nums = viennot_terms(g, request.start, targets)
            gf = viennot_gf(g, request.start, targets)
        return WalksResponse(
            method=request.method,
            start=request.start,
            targets=targets,
            function=gf,
            series=ratfun_expand(gf, request.order),
            denominator=den,
            numerators=nums,
        )


# ---------------------------------------------------------------------------
# Automata
# ---------------------------------------------------------------------------
@dataclass
class AutomatonRequest:
    machine: Nfa
    order: int = 10
    show_dfa: bool = False


@dataclass
class AutomatonResponse:
    function: RatFun
    series: TSeries
    deterministic: bool
    dfa: Nfa | None = None

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "function": str(self.function),
            "input_deterministic": self.deterministic,
            "order": self.series.order,
            "coefficients": self.series.coefficient_strings(),
        }
        if self.dfa is not None:
            d["determinized"] = self.dfa.to_dict()
        return d


class CountWords:
    """Length generating function of an automaton's language."""

    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self, request: AutomatonRequest) -> AutomatonResponse:
        machine = request.machine
        if not machine.deterministic:
            self._log.debug("Automaton is nondeterministic; running the subset construction")
        gf = automaton_gf(machine)
        dfa = determinize(machine) if request.show_dfa else None
        self._log.info("Automaton counted", states=len(machine.states), alphabet=len(machine.alphabet))
        return AutomatonResponse(
            function=gf,
            series=ratfun_expand(gf, request.order),
            deterministic=machine.deterministic,
            dfa=dfa,
        )
