"""Finite automata as counting machines."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from gfkit.domain.digraph import WeightedDigraph, transfer_gf
from gfkit.domain.errors import ComputationError
from gfkit.domain.polynomials import MPoly
from gfkit.domain.ratfun import RatFun


@dataclass(frozen=True)
class Transition:
    src: str
    letter: str
    dst: str
    multiplicity: int = 1


@dataclass(frozen=True)
class Nfa:
    """Labelled multigraph with an initial state and final states.

    Repeated (src, letter, dst) triples are merged by adding multiplicities.
    """

    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    transitions: tuple[Transition, ...]
    initial: str
    finals: frozenset[str]

    def __post_init__(self) -> None:
        known = set(self.states)
        if len(known) != len(self.states):
            raise ComputationError("duplicate state names")
        if self.initial not in known:
            raise ComputationError(f"initial state {self.initial!r} is not a state")
        missing = sorted(set(self.finals) - known)
        if missing:
            raise ComputationError(f"final states {missing} are not states")
        letters = set(self.alphabet)
        merged: dict[tuple[str, str, str], int] = {}
        for tr in self.transitions:
            if tr.src not in known or tr.dst not in known:
                raise ComputationError(f"transition {tr.src}-{tr.letter}->{tr.dst} uses an unknown state")
            if tr.letter not in letters:
                raise ComputationError(f"letter {tr.letter!r} is not in the alphabet")
            if tr.multiplicity < 1:
                raise ComputationError("transition multiplicities must be positive")
            key = (tr.src, tr.letter, tr.dst)
            merged[key] = merged.get(key, 0) + tr.multiplicity
        order = {s: k for k, s in enumerate(self.states)}
        clean = tuple(
            Transition(s, a, d, m)
            for (s, a, d), m in sorted(merged.items(), key=lambda kv: (order[kv[0][0]], kv[0][1], order[kv[0][2]]))
        )
        object.__setattr__(self, "transitions", clean)
        object.__setattr__(self, "finals", frozenset(self.finals))

    @property
    def deterministic(self) -> bool:
        seen: set[tuple[str, str]] = set()
        for tr in self.transitions:
            if tr.multiplicity != 1 or (tr.src, tr.letter) in seen:
                return False
            seen.add((tr.src, tr.letter))
        return True

    def step(self, current: Iterable[str], letter: str) -> frozenset[str]:
        cur = set(current)
        return frozenset(tr.dst for tr in self.transitions if tr.src in cur and tr.letter == letter)

    def accepts(self, word: Iterable[str]) -> bool:
        current: frozenset[str] = frozenset({self.initial})
        for letter in word:
            current = self.step(current, letter)
            if not current:
                return False
        return bool(current & self.finals)

    def to_dict(self) -> dict:
        return {
            "states": list(self.states),
            "alphabet": list(self.alphabet),
            "transitions": [
                {"from": tr.src, "letter": tr.letter, "to": tr.dst, "multiplicity": tr.multiplicity}
                for tr in self.transitions
            ],
            "initial": self.initial,
            "finals": sorted(self.finals, key=self.states.index),
            "deterministic": self.deterministic,
        }


def determinize(a: Nfa) -> Nfa:
    """Subset construction restricted to reachable, non-empty subsets; states renamed 1..m."""
    letters = sorted(a.alphabet)
    start = frozenset({a.initial})
    names: dict[frozenset[str], str] = {start: "1"}
    queue: deque[frozenset[str]] = deque([start])
    transitions: list[Transition] = []
    while queue:
        subset = queue.popleft()
        for letter in letters:
            target = a.step(subset, letter)
            if not target:
                continue
            if target not in names:
                names[target] = str(len(names) + 1)
                queue.append(target)
            transitions.append(Transition(names[subset], letter, names[target]))
    finals = frozenset(name for subset, name in names.items() if subset & a.finals)
    return Nfa(tuple(names.values()), tuple(a.alphabet), tuple(transitions), "1", finals)


def automaton_digraph(a: Nfa) -> WeightedDigraph:
    """One edge per state pair, weighted by the number of letters joining them."""
    index = {s: k + 1 for k, s in enumerate(a.states)}
    edges = [(index[tr.src], index[tr.dst], MPoly.const(tr.multiplicity)) for tr in a.transitions]
    return WeightedDigraph.from_edges(len(a.states), edges)


def automaton_gf(a: Nfa) -> RatFun:
    """Length generating function of the recognised language, each word counted once."""
    dfa = a if a.deterministic else determinize(a)
    if not dfa.finals:
        return RatFun.polynomial(MPoly.zero())
    index = {s: k + 1 for k, s in enumerate(dfa.states)}
    return transfer_gf(automaton_digraph(dfa), index[dfa.initial], [index[f] for f in dfa.finals])
