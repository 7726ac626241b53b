"""CLI adapter – parses arguments, dispatches to use cases, formats output."""

from __future__ import annotations

import argparse
import json
import os
import sys
import textwrap
from dataclasses import dataclass
from typing import Any, Callable

from gfkit.adapters import presenters
from gfkit.adapters.command_spec import COMMAND_SPEC
from gfkit.application.fixtures import FIXTURES, get_fixture
from gfkit.domain.errors import ComputationError, GfkitError, SuiteFailure, UsageError
from gfkit.domain.numeric import DEFAULT_DPS
from gfkit.domain.reports import Scale

OUTPUT_FORMATS = ("text", "json", "series")
DEFAULT_ORDER = 10


# ---------------------------------------------------------------------------
# Help text
# ---------------------------------------------------------------------------
HELP_TEXT = textwrap.dedent("""\
    gfkit – exact rational and algebraic generating functions.

    Usage:
      gfkit <command> [options]

    Commands:
      help [cmd]      Show help (or help for a specific command)
      spec            Output machine-readable command spec (JSON)
      series          Truncated series arithmetic (add, sub, mul, invert, sqrt, derive, compose, star)
      expand          Expand a rational function
      det             Determinant of a polynomial matrix
      eliminate       Resultant or discriminant
      walks           Walks on a weighted digraph (transfer matrix or Viennot)
      automaton       Length generating function of an automaton
      section         Sections of a rational series
      soittola        Dominant poles of the sections of a rational series
      asymptotics     Growth constant and exponent
      poset           P-partitions of a natural poset
      cone            Integer points of a halfspace cone
      grammar         Context-free grammar to polynomial system
      system          Canonical solution of a polynomial system
      catalytic       Equation with one catalytic variable
      roots           Power-series branches of P(t, a) = 0
      verify          Check a series against P(t, a) = 0
      lagrange        Lagrange inversion
      guess           Guess a rational or algebraic relation
      slice           Coefficient of s^k of a bivariate rational function
      diagonal        Diagonal of a bivariate rational function
      corpus          List or run the end-to-end suites

    Examples:
      gfkit automaton --fixture ccpoly --coeffs 10
      gfkit walks --fixture five_vertex --start 1 --targets 2 3 --method viennot
      gfkit grammar --fixture dyck --order 12 --words
      gfkit roots --fixture planar_maps --order 8
      gfkit guess rational --coeffs ccpoly.txt --max-deg 4 4
      gfkit asymptotics --fixture hard_particles
      gfkit corpus run dyck_area
      gfkit corpus run --all --scale small --jobs 4 --format json

    Common options:
      --format text|json|series   Output format (default: text, or GFKIT_FORMAT)
      --verbose                   DEBUG log lines on stderr
      --order N | --coeffs N      Truncation order N, or N coefficients

    Exit status: 0 success, 1 computation error, 2 usage error, 3 corpus failure.

    For detailed help:  gfkit help <command>
""")

COMMAND_HELP: dict[str, str] = {
    "help": "Usage: gfkit help [<command>]\n\nShow general help or help for a specific command.",
    "spec": "Usage: gfkit spec\n\nOutputs the full machine-readable command spec as JSON.",
    "series": (
        "Usage: gfkit series <op> --a X [--b Y] [--order N]\n\n"
        "Apply one operation to truncated series.\n"
        "  op       add, sub, mul, compose (two operands); invert, sqrt, derive, star (one)\n"
        "  --a/--b  A series file, or a rational expression in t expanded to --order\n"
        "  --format series writes the result in the series file format"
    ),
    "expand": (
        "Usage: gfkit expand (--rational F | --file F | --fixture NAME) [--order N | --coeffs N]\n\n"
        "Expand a rational function of t."
    ),
    "det": (
        "Usage: gfkit det --file MATRIX\n\n"
        "Fraction-free determinant. One matrix row per line, entries separated by commas."
    ),
    "eliminate": (
        "Usage: gfkit eliminate (--p P | --file F | --fixture NAME) [--q Q] [--var a]\n\n"
        "Resultant of P and Q in --var, or the discriminant of P when Q is omitted."
    ),
    "walks": (
        "Usage: gfkit walks (--file G | --fixture NAME) --start I --targets J [J ...] [--method transfer|viennot]\n\n"
        "Generating function of walks from I to any target.\n"
        "  --method viennot also prints the cycle denominator and each path numerator"
    ),
    "automaton": (
        "Usage: gfkit automaton (--file A | --fixture NAME) [--coeffs N] [--determinize]\n\n"
        "Length generating function of the accepted language.\n"
        "  --determinize   also print the subset-construction DFA"
    ),
    "section": (
        "Usage: gfkit section (--rational F | --fixture NAME) --r R --p P\n\n"
        "The rational function sum_n a_(pn+r) t^n."
    ),
    "soittola": (
        "Usage: gfkit soittola (--rational F | --fixture NAME) [--pmax P] [--precision EPS]\n\n"
        "Dominant-pole count of every section A_(r,p), p <= pmax."
    ),
    "asymptotics": (
        "Usage: gfkit asymptotics (--rational F | --equation P | --file P | --fixture NAME) [--n-fit N] [--branch C]\n\n"
        "a_n ~ kappa rho^-n n^d.  For P(t, a) = 0 the branch with non-negative coefficients\n"
        "is used unless --branch names its constant term."
    ),
    "poset": (
        "Usage: gfkit poset (--file P | --fixture NAME) [--order N] [--classify l1,l2,...]\n\n"
        "Linear extensions with their descent data, the P-partition generating function,\n"
        "and a brute-force check to --order."
    ),
    "cone": "Usage: gfkit cone (--file H | --fixture NAME) [--order N]\n\nCount cone points by total size.",
    "grammar": (
        "Usage: gfkit grammar (--file G | --fixture NAME) [--order N] [--words]\n\n"
        "Polynomial system of a grammar and its canonical solution.  Unit rules are inlined first.\n"
        "  --words   also count distinct words (order <= 14); a mismatch means ambiguity"
    ),
    "system": (
        "Usage: gfkit system (--file S | --fixture NAME) [--order N] [--normalize quadratic|leading_t]\n\n"
        "Canonical solution; linear terms are substituted away first when possible."
    ),
    "catalytic": (
        "Usage: gfkit catalytic (--file E | --fixture NAME) [--order N]\n\n"
        "Solve G(u) = R(t, u, G(u), G1, DD) where G1 = G(1) and DD = (G(u) - G1)/(u - 1)."
    ),
    "roots": (
        "Usage: gfkit roots (--equation P | --file P | --fixture NAME) [--order N] [--var a]\n\n"
        "Every power-series branch with a rational simple constant term."
    ),
    "verify": (
        "Usage: gfkit verify --series FILE (--equation P | --file P | --fixture NAME) [--var a]\n\n"
        "Largest m with P(t, a(t)) = 0 mod t^(m+1)."
    ),
    "lagrange": (
        "Usage: gfkit lagrange --phi PHI [--psi PSI] --n N\n\n"
        "[t^n] Psi(U) where U = t Phi(U); PHI and PSI are rational expressions in x."
    ),
    "guess": (
        "Usage: gfkit guess rational|algebraic --coeffs FILE [--max-deg D E]\n\n"
        "rational:  smallest P/Q with deg P <= D, deg Q <= E\n"
        "algebraic: P(t, a) of bidegree (D, E)\n"
        "At least three coefficients beyond the fitted ones must agree."
    ),
    "slice": (
        "Usage: gfkit slice (--function F | --file F) [--k K] [--vars ts|xy] [--order N]\n\n"
        "[s^k] F(t, s).  With --vars xy, F is given in x = t s and y = t / s."
    ),
    "diagonal": (
        "Usage: gfkit diagonal (--function F | --file F) [--vars xy|ts] [--order N]\n\n"
        "The diagonal sum_n a_(n,n) t^n of F(x, y)."
    ),
    "corpus": (
        "Usage: gfkit corpus list\n"
        "       gfkit corpus run (NAME ... | --all) [--scale small|default] [--jobs N] [--report PATH] [--timing]\n\n"
        "Exit status 3 when a check fails.  GFKIT_SCALE overrides --scale."
    ),
}


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation: parsed arguments merged with the environment."""

    command: str
    args: argparse.Namespace
    order: int = DEFAULT_ORDER
    output_format: str = "text"
    inputs: tuple[str, ...] = ()
    scale: Scale = Scale.DEFAULT
    verbose: bool = False
    dps: int = DEFAULT_DPS
    report_dir: str | None = None
    max_deg: tuple[int, int] = (4, 4)
    variable: str = "a"

    def __post_init__(self) -> None:
        if self.order < 0:
            raise UsageError(f"order must be non-negative, got {self.order}")
        if self.output_format not in OUTPUT_FORMATS:
            raise UsageError(f"--format must be one of {', '.join(OUTPUT_FORMATS)}")
        for path in self.inputs:
            if not os.path.isfile(path):
                raise UsageError(f"no such file or fixture: {path}")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _input_paths(args: argparse.Namespace) -> tuple[str, ...]:
    paths = []
    path = getattr(args, "file", None)
    if path and not (path in FIXTURES and not os.path.exists(path)):
        paths.append(path)
    for attr in ("coeffs_file", "series_file"):
        value = getattr(args, attr, None)
        if value:
            paths.append(value)
    return tuple(paths)


def _order(args: argparse.Namespace) -> int:
    coeffs = getattr(args, "coeffs", None)
    order = getattr(args, "order", None)
    if coeffs is not None and order is not None:
        raise UsageError("give --order or --coeffs, not both")
    if coeffs is not None:
        if coeffs < 1:
            raise UsageError("--coeffs must be at least 1")
        return coeffs - 1
    return DEFAULT_ORDER if order is None else order


def parse_config(argv: list[str] | None = None) -> RunConfig | None:
    """Arguments plus environment; None when no command was given."""
    from gfkit.infrastructure.config import load_config

    args = build_parser().parse_args(argv)
    if not args.command:
        return None
    env = load_config()
    scale = env.scale or Scale(getattr(args, "scale", Scale.DEFAULT.value))
    return RunConfig(
        command=args.command,
        args=args,
        order=_order(args),
        output_format=getattr(args, "format", None) or env.output_format,
        inputs=_input_paths(args),
        scale=scale,
        verbose=getattr(args, "verbose", False) or env.verbose,
        dps=env.dps,
        report_dir=env.report_dir,
        max_deg=tuple(getattr(args, "max_deg", None) or (4, 4)),  # type: ignore[arg-type]
        variable=getattr(args, "var", None) or "a",
    )


# ---------------------------------------------------------------------------
# Build container (lazy import to avoid circular deps)
# ---------------------------------------------------------------------------
def _build_container(config: RunConfig) -> dict:
    from gfkit.infrastructure.clock import WallClock
    from gfkit.infrastructure.logger import ConsoleLogger
    from gfkit.infrastructure.report_store import JsonReportStore

    return {
        "logger": ConsoleLogger(verbose=config.verbose),
        "clock": WallClock(),
        "store": JsonReportStore(config.report_dir),
    }


# ---------------------------------------------------------------------------
# Input helpers
# ---------------------------------------------------------------------------
def _load(args: argparse.Namespace, kind: str) -> Any:
    """The --fixture, or the --file (a path, else a fixture name)."""
    from gfkit.infrastructure.loaders import LOADERS

    fixture = getattr(args, "fixture", None)
    path = getattr(args, "file", None)
    if fixture and path:
        raise UsageError("give --file or --fixture, not both")
    if fixture:
        return get_fixture(fixture, kind)
    if path:
        if os.path.exists(path):
            return LOADERS[kind](path)
        return get_fixture(path, kind)
    raise UsageError(f"this command needs --file or --fixture (a {kind})")


def _has_input(args: argparse.Namespace) -> bool:
    return bool(getattr(args, "fixture", None) or getattr(args, "file", None))


def _rational(args: argparse.Namespace):
    from gfkit.domain.ratfun import RatFun

    if args.rational and _has_input(args):
        raise UsageError("give --rational or an input, not both")
    if args.rational:
        return RatFun.parse(args.rational, source="--rational")
    return _load(args, "ratfun")


def _equation(args: argparse.Namespace):
    from gfkit.domain.expressions import parse_polynomial

    if args.equation and _has_input(args):
        raise UsageError("give --equation or an input, not both")
    if args.equation:
        return parse_polynomial(args.equation, source="--equation")
    return _load(args, "equation")


def _series_operand(text: str, order: int, flag: str):
    from gfkit.domain.ratfun import RatFun, ratfun_expand
    from gfkit.infrastructure.loaders import load_series

    if os.path.exists(text):
        return load_series(text)
    return ratfun_expand(RatFun.parse(text, source=flag), order)


def _series_in_x(text: str, order: int, flag: str):
    from gfkit.domain.expressions import parse_fraction
    from gfkit.domain.ratfun import RatFun, ratfun_expand

    num, den = parse_fraction(text, source=flag)
    extra = sorted((set(num.variables) | set(den.variables)) - {"x"})
    if extra:
        raise UsageError(f"{flag} may only use the variable x, found {', '.join(extra)}")
    return ratfun_expand(RatFun.from_mpolys(num, den, var="x"), order)


def _bivariate(args: argparse.Namespace):
    from gfkit.domain.laurent import BiRatFun
    from gfkit.infrastructure.loaders import load_biratfun

    if args.function and args.file:
        raise UsageError("give --function or --file, not both")
    if args.function:
        return BiRatFun.parse(args.function, variables=args.vars, source="--function")
    if args.file:
        return load_biratfun(args.file, args.vars)
    raise UsageError("this command needs --function or --file")


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------
def cmd_help(config: RunConfig, c: dict) -> str:
    name = config.args.command_name
    if name:
        text = COMMAND_HELP.get(name)
        if text:
            return text
        return f"Unknown command: {name}\n{HELP_TEXT}"
    return HELP_TEXT


def cmd_spec(_config: RunConfig, c: dict) -> str:
    return json.dumps(COMMAND_SPEC, indent=2)


def cmd_series(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.arithmetic import SeriesArithmetic, SeriesRequest

    args = config.args
    a = _series_operand(args.a, config.order, "--a")
    b = _series_operand(args.b, config.order, "--b") if args.b else None
    return SeriesArithmetic(logger=c["logger"]).execute(SeriesRequest(op=args.op, a=a, b=b))


def cmd_expand(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.arithmetic import ExpandRationalFunction, ExpandRequest

    uc = ExpandRationalFunction(logger=c["logger"])
    return uc.execute(ExpandRequest(function=_rational(config.args), order=config.order))


def cmd_det(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.arithmetic import Determinant, DeterminantRequest
    from gfkit.infrastructure.loaders import load_matrix

    if not config.args.file:
        raise UsageError("det needs --file")
    return Determinant(logger=c["logger"]).execute(DeterminantRequest(matrix=load_matrix(config.args.file)))


def cmd_eliminate(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.arithmetic import Eliminate, EliminateRequest
    from gfkit.domain.expressions import parse_polynomial

    args = config.args
    if args.p and _has_input(args):
        raise UsageError("give --p or an input, not both")
    p = parse_polynomial(args.p, source="--p") if args.p else _load(args, "equation")
    q = parse_polynomial(args.q, source="--q") if args.q else None
    return Eliminate(logger=c["logger"]).execute(EliminateRequest(p=p, q=q, var=config.variable))


def cmd_walks(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.walks import CountWalks, WalksRequest

    args = config.args
    if not args.targets:
        raise UsageError("walks needs --targets")
    req = WalksRequest(
        graph=_load(args, "digraph"),
        start=args.start,
        targets=args.targets,
        method=args.method,
        order=config.order,
    )
    return CountWalks(logger=c["logger"]).execute(req)


def cmd_automaton(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.walks import AutomatonRequest, CountWords

    req = AutomatonRequest(machine=_load(config.args, "automaton"), order=config.order, show_dfa=config.args.determinize)
    return CountWords(logger=c["logger"]).execute(req)


def cmd_section(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.rational import SectionRequest, TakeSection

    args = config.args
    if args.r is None or args.p is None:
        raise UsageError("section needs --r and --p")
    return TakeSection(logger=c["logger"]).execute(SectionRequest(function=_rational(args), r=args.r, p=args.p))


def cmd_soittola(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.rational import CheckSoittola, SoittolaRequest

    args = config.args
    req = SoittolaRequest(function=_rational(args), p_max=args.pmax, precision=args.precision, dps=config.dps)
    return CheckSoittola(logger=c["logger"]).execute(req)


def cmd_asymptotics(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.rational import AsymptoticsRequest, EstimateAsymptotics
    from gfkit.domain.expressions import parse_rational

    args = config.args
    fixture = args.fixture or (args.file if args.file and not os.path.exists(args.file) else None)
    rational = equation = None
    if args.rational or (fixture in FIXTURES and FIXTURES[fixture].kind == "ratfun"):
        rational = _rational(args)
    else:
        equation = _equation(args)
    branch = parse_rational(args.branch, source="--branch") if args.branch else None
    req = AsymptoticsRequest(rational=rational, equation=equation, n_fit=args.n_fit, branch=branch, dps=config.dps)
    return EstimateAsymptotics(logger=c["logger"]).execute(req)


def _classify(text: str | None):
    from gfkit.domain.posets import PPartition

    if not text:
        return None
    try:
        return PPartition(tuple(int(x) for x in text.replace(",", " ").split()))
    except ValueError:
        raise UsageError(f"--classify expects integers, got {text!r}") from None


def cmd_poset(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.posets import AnalysePoset, PosetRequest

    req = PosetRequest(poset=_load(config.args, "poset"), order=config.order, classify=_classify(config.args.classify))
    return AnalysePoset(logger=c["logger"]).execute(req)


def cmd_cone(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.posets import ConeRequest, CountCone

    return CountCone(logger=c["logger"]).execute(ConeRequest(system=_load(config.args, "cone"), order=config.order))


def cmd_grammar(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.systems import GrammarRequest, SolveGrammar

    req = GrammarRequest(grammar=_load(config.args, "grammar"), order=config.order, words=config.args.words)
    return SolveGrammar(logger=c["logger"]).execute(req)


def cmd_system(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.systems import SolveSystem, SystemRequest

    req = SystemRequest(system=_load(config.args, "system"), order=config.order, normalize=config.args.normalize)
    return SolveSystem(logger=c["logger"]).execute(req)


def cmd_catalytic(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.systems import CatalyticRequest, SolveCatalytic

    req = CatalyticRequest(equation=_load(config.args, "catalytic"), order=config.order)
    return SolveCatalytic(logger=c["logger"]).execute(req)


def cmd_roots(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.branches import FindRoots, RootsRequest

    req = RootsRequest(equation=_equation(config.args), order=config.order, var=config.variable)
    return FindRoots(logger=c["logger"]).execute(req)


def cmd_verify(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.branches import VerifyBranch, VerifyRequest
    from gfkit.infrastructure.loaders import load_series

    args = config.args
    if not args.series_file:
        raise UsageError("verify needs --series")
    req = VerifyRequest(series=load_series(args.series_file), equation=_equation(args), var=config.variable)
    return VerifyBranch(logger=c["logger"]).execute(req)


def cmd_lagrange(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.systems import LagrangeInversion, LagrangeRequest

    args = config.args
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    phi = _series_in_x(args.phi, args.n, "--phi")
    psi = _series_in_x(args.psi, args.n, "--psi")
    return LagrangeInversion(logger=c["logger"]).execute(LagrangeRequest(phi=phi, psi=psi, n=args.n))


def cmd_guess(config: RunConfig, c: dict) -> Any:
    from gfkit.application.use_cases.guess import GuessRelation, GuessRequest
    from gfkit.infrastructure.loaders import load_series

    args = config.args
    if not args.coeffs_file:
        raise UsageError("guess needs --coeffs FILE")
    series = load_series(args.coeffs_file)
    if not series.is_scalar:
        raise ComputationError("guessing needs numeric coefficients")
    req = GuessRequest(kind=args.kind, coeffs=series.scalars(), degrees=config.max_deg)
    return GuessRelation(logger=c["logger"]).execute(req)


def _slice(config: RunConfig, c: dict, mode: str, k: int) -> Any:
    from gfkit.application.use_cases.slices import SliceRequest, TakeSlice

    req = SliceRequest(function=_bivariate(config.args), mode=mode, k=k, order=config.order)
    return TakeSlice(logger=c["logger"]).execute(req)


def cmd_slice(config: RunConfig, c: dict) -> Any:
    return _slice(config, c, "slice", config.args.k)


def cmd_diagonal(config: RunConfig, c: dict) -> Any:
    return _slice(config, c, "diagonal", 0)


def cmd_corpus(config: RunConfig, c: dict) -> Any:
    from gfkit.application.corpus import list_suites
    from gfkit.application.use_cases.corpus import ListSuites, RunSuites, RunSuitesRequest

    args = config.args
    if args.action == "list":
        if args.names or args.all:
            raise UsageError("corpus list takes no suite names")
        return ListSuites(logger=c["logger"]).execute()
    if args.all and args.names:
        raise UsageError("give suite names or --all, not both")
    req = RunSuitesRequest(
        names=list_suites() if args.all else list(args.names),
        scale=config.scale,
        jobs=args.jobs,
        include_timing=args.timing,
        save=config.report_dir is not None,
        report_path=args.report,
    )
    uc = RunSuites(store=c["store"], clock=c["clock"], logger=c["logger"])
    return uc.execute(req)


# ---------------------------------------------------------------------------
# Argument parser
# ---------------------------------------------------------------------------
def _parents() -> tuple[argparse.ArgumentParser, argparse.ArgumentParser, argparse.ArgumentParser]:
    common = _Parser(add_help=False)
    common.add_argument("--format", type=str, default=None, choices=list(OUTPUT_FORMATS))
    common.add_argument("--verbose", action="store_true", default=False)

    source = _Parser(add_help=False)
    source.add_argument("--file", type=str, default=None)
    source.add_argument("--fixture", type=str, default=None)

    ordered = _Parser(add_help=False)
    ordered.add_argument("--order", type=int, default=None)
    ordered.add_argument("--coeffs", type=int, default=None)
    return common, source, ordered


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gfkit", description="gfkit CLI", add_help=False)
    sub = parser.add_subparsers(dest="command")
    common, source, ordered = _parents()

    # help
    p_help = sub.add_parser("help", add_help=False)
    p_help.add_argument("command_name", nargs="?", default=None)
    p_help.set_defaults(func=cmd_help)

    # spec
    p_spec = sub.add_parser("spec", add_help=False)
    p_spec.set_defaults(func=cmd_spec)

    # series
    p_series = sub.add_parser("series", add_help=False, parents=[common])
    p_series.add_argument("op", type=str)
    p_series.add_argument("--a", type=str, required=True)
    p_series.add_argument("--b", type=str, default=None)
    p_series.add_argument("--order", type=int, default=None)
    p_series.set_defaults(func=cmd_series)

    # expand
    p_expand = sub.add_parser("expand", add_help=False, parents=[common, source, ordered])
    p_expand.add_argument("--rational", type=str, default=None)
    p_expand.set_defaults(func=cmd_expand)

    # det
    p_det = sub.add_parser("det", add_help=False, parents=[common])
    p_det.add_argument("--file", type=str, default=None)
    p_det.set_defaults(func=cmd_det)

    # eliminate
    p_elim = sub.add_parser("eliminate", add_help=False, parents=[common, source])
    p_elim.add_argument("--p", type=str, default=None)
    p_elim.add_argument("--q", type=str, default=None)
    p_elim.add_argument("--var", type=str, default="a")
    p_elim.set_defaults(func=cmd_eliminate)

    # walks
    p_walks = sub.add_parser("walks", add_help=False, parents=[common, source, ordered])
    p_walks.add_argument("--start", type=int, default=1)
    p_walks.add_argument("--targets", type=int, nargs="+", default=None)
    p_walks.add_argument("--method", type=str, default="transfer", choices=["transfer", "viennot"])
    p_walks.set_defaults(func=cmd_walks)

    # automaton
    p_auto = sub.add_parser("automaton", add_help=False, parents=[common, source, ordered])
    p_auto.add_argument("--determinize", action="store_true", default=False)
    p_auto.set_defaults(func=cmd_automaton)

    # section
    p_section = sub.add_parser("section", add_help=False, parents=[common, source])
    p_section.add_argument("--rational", type=str, default=None)
    p_section.add_argument("--r", type=int, default=None)
    p_section.add_argument("--p", type=int, default=None)
    p_section.set_defaults(func=cmd_section)

    # soittola
    p_soittola = sub.add_parser("soittola", add_help=False, parents=[common, source])
    p_soittola.add_argument("--rational", type=str, default=None)
    p_soittola.add_argument("--pmax", type=int, default=1)
    p_soittola.add_argument("--precision", type=float, default=1e-6)
    p_soittola.set_defaults(func=cmd_soittola)

    # asymptotics
    p_asym = sub.add_parser("asymptotics", add_help=False, parents=[common, source])
    p_asym.add_argument("--rational", type=str, default=None)
    p_asym.add_argument("--equation", type=str, default=None)
    p_asym.add_argument("--n-fit", type=int, default=500)
    p_asym.add_argument("--branch", type=str, default=None)
    p_asym.set_defaults(func=cmd_asymptotics)

    # poset
    p_poset = sub.add_parser("poset", add_help=False, parents=[common, source, ordered])
    p_poset.add_argument("--classify", type=str, default=None)
    p_poset.set_defaults(func=cmd_poset)

    # cone
    p_cone = sub.add_parser("cone", add_help=False, parents=[common, source, ordered])
    p_cone.set_defaults(func=cmd_cone)

    # grammar
    p_grammar = sub.add_parser("grammar", add_help=False, parents=[common, source, ordered])
    p_grammar.add_argument("--words", action="store_true", default=False)
    p_grammar.set_defaults(func=cmd_grammar)

    # system
    p_system = sub.add_parser("system", add_help=False, parents=[common, source, ordered])
    p_system.add_argument("--normalize", type=str, default=None)
    p_system.set_defaults(func=cmd_system)

    # catalytic
    p_cat = sub.add_parser("catalytic", add_help=False, parents=[common, source, ordered])
    p_cat.set_defaults(func=cmd_catalytic)

    # roots
    p_roots = sub.add_parser("roots", add_help=False, parents=[common, source, ordered])
    p_roots.add_argument("--equation", type=str, default=None)
    p_roots.add_argument("--var", type=str, default="a")
    p_roots.set_defaults(func=cmd_roots)

    # verify
    p_verify = sub.add_parser("verify", add_help=False, parents=[common, source])
    p_verify.add_argument("--series", dest="series_file", type=str, default=None)
    p_verify.add_argument("--equation", type=str, default=None)
    p_verify.add_argument("--var", type=str, default="a")
    p_verify.set_defaults(func=cmd_verify)

    # lagrange
    p_lagrange = sub.add_parser("lagrange", add_help=False, parents=[common])
    p_lagrange.add_argument("--phi", type=str, required=True)
    p_lagrange.add_argument("--psi", type=str, default="x")
    p_lagrange.add_argument("--n", type=int, required=True)
    p_lagrange.set_defaults(func=cmd_lagrange)

    # guess
    p_guess = sub.add_parser("guess", add_help=False, parents=[common])
    p_guess.add_argument("kind", type=str, choices=["rational", "algebraic"])
    p_guess.add_argument("--coeffs", dest="coeffs_file", type=str, default=None)
    p_guess.add_argument("--max-deg", type=int, nargs=2, default=None, metavar=("D", "E"))
    p_guess.set_defaults(func=cmd_guess)

    # slice / diagonal
    p_slice = sub.add_parser("slice", add_help=False, parents=[common, ordered])
    p_slice.add_argument("--function", type=str, default=None)
    p_slice.add_argument("--file", type=str, default=None)
    p_slice.add_argument("--k", type=int, default=0)
    p_slice.add_argument("--vars", type=str, default="ts", choices=["ts", "xy"])
    p_slice.set_defaults(func=cmd_slice)

    p_diag = sub.add_parser("diagonal", add_help=False, parents=[common, ordered])
    p_diag.add_argument("--function", type=str, default=None)
    p_diag.add_argument("--file", type=str, default=None)
    p_diag.add_argument("--vars", type=str, default="xy", choices=["ts", "xy"])
    p_diag.set_defaults(func=cmd_diagonal)

    # corpus
    p_corpus = sub.add_parser("corpus", add_help=False, parents=[common])
    p_corpus.add_argument("action", type=str, choices=["list", "run"])
    p_corpus.add_argument("names", nargs="*", default=[])
    p_corpus.add_argument("--all", action="store_true", default=False)
    p_corpus.add_argument("--scale", type=str, default=Scale.DEFAULT.value, choices=[s.value for s in Scale])
    p_corpus.add_argument("--jobs", type=int, default=1)
    p_corpus.add_argument("--report", type=str, default=None)
    p_corpus.add_argument("--timing", action="store_true", default=False)
    p_corpus.set_defaults(func=cmd_corpus)

    return parser


# ---------------------------------------------------------------------------
# Execution
# ---------------------------------------------------------------------------
def execute(config: RunConfig, container: dict | None = None) -> tuple[int, str]:
    """Run one command; return (exit code, output document)."""
    c = container if container is not None else _build_container(config)
    handler: Callable[[RunConfig, dict], Any] = config.args.func
    try:
        response = handler(config, c)
        document = presenters.render(response, config.output_format)
    except UsageError as exc:
        return 2, f"ERROR: {exc}"
    except SuiteFailure as exc:
        return 3, presenters.render(exc.response, config.output_format)
    except (GfkitError, ZeroDivisionError) as exc:
        return 1, f"ERROR: {exc}"
    return 0, document


def run_cli(argv: list[str] | None = None) -> None:
    """Parse args and dispatch to the appropriate command handler."""
    try:
        config = parse_config(argv)
    except UsageError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        sys.exit(2)

    if config is None:
        print(HELP_TEXT, end="")
        return

    code, document = execute(config)
    if code in (0, 3):
        sys.stdout.write(document)
    else:
        print(document, file=sys.stderr)
    if code:
        sys.exit(code)
