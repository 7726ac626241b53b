"""Named built-in inputs, addressable from the CLI with ``--fixture NAME``.

Each fixture has a kind (the loader it stands in for) and a builder; values are
built on demand and never cached across calls.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from gfkit.domain.automata import Nfa, Transition
from gfkit.domain.catalytic import CatalyticEquation
from gfkit.domain.digraph import WeightedDigraph
from gfkit.domain.errors import UsageError
from gfkit.domain.expressions import parse_polynomial
from gfkit.domain.posets import HalfspaceSystem, NaturalPoset
from gfkit.domain.ratfun import RatFun
from gfkit.domain.systems import Cfg, PolySystem, Rule

KINDS = ("automaton", "digraph", "grammar", "system", "equation", "catalytic", "ratfun", "poset", "cone")


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    description: str
    build: Callable[[], Any]


# ---------------------------------------------------------------------------
# Automata and digraphs
# ---------------------------------------------------------------------------
def _nfa(states: str, alphabet: str, moves: str, initial: str, finals: str) -> Nfa:
    """*moves* is a space-separated list of ``src-letter-dst`` triples."""
    transitions = []
    for move in moves.split():
        src, letter, dst = move.split("-")
        transitions.append(Transition(src, letter, dst))
    return Nfa(tuple(states.split()), tuple(alphabet.split()), tuple(transitions), initial, frozenset(finals.split()))


def column_convex_automaton() -> Nfa:
    # A, B, C stand for the barred letters.
    return _nfa(
        "1 2 3 4 5",
        "a b c A B C",
        "1-c-2 2-a-2 3-a-2 4-c-2 "
        "2-A-4 3-A-4 4-a-4 5-a-4 "
        "2-c-3 3-b-3 3-c-3 "
        "2-C-5 3-B-5 3-C-5 5-b-5",
        "1",
        "2 3",
    )


def _digraph(vertices: int, edges: str) -> WeightedDigraph:
    """*edges* is a comma-separated list of ``i j [weight]``."""
    parsed = []
    for item in edges.split(","):
        parts = item.split()
        weight = parse_polynomial(parts[2]) if len(parts) > 2 else 1
        parsed.append((int(parts[0]), int(parts[1]), weight))
    return WeightedDigraph.from_edges(vertices, parsed)


def walk_digraph() -> WeightedDigraph:
    return _digraph(
        5,
        "1 2, 2 2, 3 3 x, 4 4, 5 5, 3 2, 4 2, 2 3, 2 4, 3 4, 5 4, 2 5, 3 5 y",
    )


# ---------------------------------------------------------------------------
# Grammars and systems
# ---------------------------------------------------------------------------
def _grammar(start: str, letters: str, rules: str) -> Cfg:
    """*rules* is ``;``-separated ``HEAD -> body | body`` groups."""
    symbols: list[str] = []
    parsed: list[Rule] = []
    for group in rules.split(";"):
        head, bodies = (part.strip() for part in group.split("->"))
        if head not in symbols:
            symbols.append(head)
        for body in bodies.split("|"):
            parsed.append(Rule(head, tuple(body.split())))
    symbols.remove(start)
    return Cfg((start, *symbols), tuple(letters.split()), tuple(parsed))


def _system(text: str) -> PolySystem:
    pairs = []
    for line in text.split(";"):
        name, rhs = (part.strip() for part in line.split("="))
        pairs.append((name, parse_polynomial(rhs)))
    return PolySystem.of(pairs)


DYCK_RULES = "S -> a b | a b S | a S b | a S b S"
MEANDER0_RULES = "M0 -> a b | a M0 b | a b M0 | a M0 b M0"
MEANDER_RULES = "M -> M0 | a | a M | M0 a | M0 a M; " + MEANDER0_RULES


# ---------------------------------------------------------------------------
# Equations
# ---------------------------------------------------------------------------
HARD_PARTICLE_QUARTIC = (
    "23328*t^6*a^4 + 27*t^4*(91 - 2088*t)*a^3 + t^2*(86 - 3951*t + 46710*t^2 + 3456*t^3)*a^2"
    " + (1 - 69*t + 1598*t^2 - 11743*t^3 - 14544*t^4)*a - 1 + 66*t - 1495*t^2 + 11485*t^3 + 128*t^4"
)
HARD_PARTICLES = "a*(1 - 2*a)*(1 - 3*a + 3*a^2) - t"
PLANAR_MAPS = "27*t^2*a^2 + (1 - 18*t)*a - 1 + 16*t"
TRIANGULATIONS = "1 - 27*t + (-1 + 36*t)*a - 8*t*a^2 - 16*t^2*a^3"
THREE_CONNECTED = "-1 + 16*t + (1 - 20*t)*a + (3*t + 8*t^2)*a^2 + 3*t^2*a^3 + t^3*a^4"
MAPS_CATALYTIC = "G(u) = 1 + t*u^2*G(u)^2 + t*u*DD"

COLUMN_CONVEX = "t*(1 - t)^3/(1 - 5*t + 7*t^2 - 4*t^3)"
COS2 = "(1 - 2*t + 225*t^2)/((1 - 25*t)*(625*t^2 + 14*t + 1))"


FIXTURES: dict[str, Fixture] = {
    f.name: f
    for f in (
        Fixture("ccpoly", "automaton", "column-convex polyomino words", column_convex_automaton),
        Fixture("ab_star", "automaton", "the language (ab)*", lambda: _nfa("1 2", "a b", "1-a-2 2-b-1", "1", "1")),
        Fixture(
            "ends_in_a",
            "automaton",
            "words over {a, b} ending in a (nondeterministic)",
            lambda: _nfa("1 2", "a b", "1-a-1 1-b-1 1-a-2", "1", "2"),
        ),
        Fixture("five_vertex", "digraph", "five-vertex digraph with loop weight x and edge weight y", walk_digraph),
        Fixture("two_cycle", "digraph", "a single 2-cycle", lambda: _digraph(2, "1 2, 2 1")),
        Fixture("dyck", "grammar", "Dyck words", lambda: _grammar("S", "a b", DYCK_RULES)),
        Fixture("meander0", "grammar", "excursions encoded on {a, b}", lambda: _grammar("M0", "a b", MEANDER0_RULES)),
        Fixture("meanders", "grammar", "non-negative walks (has a unit rule)", lambda: _grammar("M", "a b", MEANDER_RULES)),
        Fixture("binary", "grammar", "S -> a | S S", lambda: _grammar("S", "a", "S -> a | S S")),
        Fixture("ambiguous", "grammar", "S -> a | S S | S S S", lambda: _grammar("S", "a", "S -> a | S S | S S S")),
        Fixture("two_unknowns", "system", "A1 = t^2 + A1*A2, A2 = 2*t*A1^3", lambda: _system("A1 = t^2 + A1*A2; A2 = 2*t*A1^3")),
        Fixture(
            "excursions",
            "system",
            "walks returning to height 0 (needs properization)",
            lambda: _system("W0 = M0*(2 + W0); M0 = t^2*(1 + M0)^2"),
        ),
        Fixture("heaps", "system", "heaps of dimers (needs properization)", lambda: _system("H = t + t*H + t*H^2; P = H*(1 + P)")),
        Fixture("budding", "system", "budding trees", lambda: _system("B = 3*t*(1 + B)^2")),
        Fixture("hard_particle_quartic", "equation", "hard-particle quartic", lambda: parse_polynomial(HARD_PARTICLE_QUARTIC)),
        Fixture("hard_particles", "equation", "cleared parametrisation of the hard-particle series", lambda: parse_polynomial(HARD_PARTICLES)),
        Fixture("planar_maps", "equation", "rooted planar maps", lambda: parse_polynomial(PLANAR_MAPS)),
        Fixture("triangulations", "equation", "planar triangulations", lambda: parse_polynomial(TRIANGULATIONS)),
        Fixture("three_connected", "equation", "3-connected triangulations", lambda: parse_polynomial(THREE_CONNECTED)),
        Fixture("maps_catalytic", "catalytic", "planar maps counted by root-face degree", lambda: CatalyticEquation.parse(MAPS_CATALYTIC)),
        Fixture("column_convex", "ratfun", "column-convex polyominoes", lambda: RatFun.parse(COLUMN_CONVEX)),
        Fixture("cos2", "ratfun", "25^n cos^2(n alpha), cos(alpha) = 3/5", lambda: RatFun.parse(COS2)),
        Fixture("example_poset", "poset", "1 < 3, 2 < 3, 2 < 4", lambda: NaturalPoset.from_pairs(4, [(1, 3), (2, 3), (2, 4)])),
        Fixture("cone_doubling", "cone", "2a1 >= a2, 2a2 >= a1", lambda: HalfspaceSystem(2, ((2, -1), (-1, 2)))),
        Fixture("cone_triangle", "cone", "a3 <= a1 + a2", lambda: HalfspaceSystem(3, ((1, 1, -1),))),
    )
}


def fixture_names(kind: str | None = None) -> list[str]:
    return sorted(name for name, f in FIXTURES.items() if kind is None or f.kind == kind)


def get_fixture(name: str, kind: str) -> Any:
    """Build fixture *name*, which must be of *kind*."""
    fixture = FIXTURES.get(name)
    if fixture is None:
        raise UsageError(f"unknown fixture {name!r} (known: {', '.join(fixture_names(kind))})")
    if fixture.kind != kind:
        raise UsageError(f"fixture {name!r} is a {fixture.kind}, this command needs a {kind}")
    return fixture.build()
