"""Weighted digraphs and their walk generating functions.

Two independent routes to the same rational function: the transfer matrix
(cofactor over det(I - tX)) and the alternating sum over non-intersecting
cycle collections.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from gfkit.domain.errors import ComputationError, GuardExceededError
from gfkit.domain.linalg import det_bareiss
from gfkit.domain.polynomials import MPoly
from gfkit.domain.ratfun import RatFun

VIENNOT_MAX_VERTICES = 12

Edge = tuple[int, int, MPoly]


@dataclass(frozen=True)
class WeightedDigraph:
    """Vertices 1..vertices; at most one edge per ordered pair, nonzero weights."""

    vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.vertices < 1:
            raise ComputationError("a digraph needs at least one vertex")
        merged: dict[tuple[int, int], MPoly] = {}
        for src, dst, weight in self.edges:
            self._check_vertex(src)
            self._check_vertex(dst)
            merged[(src, dst)] = merged.get((src, dst), MPoly.zero()) + weight
        clean = tuple((s, d, w) for (s, d), w in sorted(merged.items()) if not w.is_zero)
        object.__setattr__(self, "edges", clean)

    @classmethod
    def from_edges(cls, vertices: int, edges: Iterable[tuple[int, int, object]]) -> "WeightedDigraph":
        return cls(vertices, tuple((s, d, w if isinstance(w, MPoly) else MPoly.const(w)) for s, d, w in edges))

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.vertices:
            raise ComputationError(f"vertex {v} is not in 1..{self.vertices}")

    def check_targets(self, i: int, targets: Iterable[int]) -> tuple[int, ...]:
        self._check_vertex(i)
        ts = tuple(sorted(set(targets)))
        if not ts:
            raise ComputationError("at least one target vertex is needed")
        for j in ts:
            self._check_vertex(j)
        return ts

    def weight(self, i: int, j: int) -> MPoly:
        for s, d, w in self.edges:
            if (s, d) == (i, j):
                return w
        return MPoly.zero()

    def successors(self, i: int) -> list[tuple[int, MPoly]]:
        return [(d, w) for s, d, w in self.edges if s == i]

    def kernel_matrix(self) -> list[list[MPoly]]:
        """I - tX."""
        t = MPoly.var("t")
        m = [[MPoly.one() if r == c else MPoly.zero() for c in range(self.vertices)] for r in range(self.vertices)]
        for s, d, w in self.edges:
            m[s - 1][d - 1] = m[s - 1][d - 1] - w * t
        return m

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertices,
            "edges": [{"from": s, "to": d, "weight": str(w)} for s, d, w in self.edges],
        }


def _minor(m: list[list[MPoly]], row: int, col: int) -> list[list[MPoly]]:
    return [[x for c, x in enumerate(r) if c != col] for k, r in enumerate(m) if k != row]


def transfer_gf(g: WeightedDigraph, i: int, targets: Iterable[int]) -> RatFun:
    """Sum over j in targets of the (i, j) entry of (I - tX)^-1."""
    ts = g.check_targets(i, targets)
    m = g.kernel_matrix()
    den = det_bareiss(m)
    num = MPoly.zero()
    for j in ts:
        cof = det_bareiss(_minor(m, j - 1, i - 1))
        num = num + (cof if (i + j) % 2 == 0 else -cof)
    return RatFun.from_mpolys(num, den)


# ---------------------------------------------------------------------------
# Non-intersecting cycle collections
# ---------------------------------------------------------------------------
def elementary_cycles(g: WeightedDigraph) -> list[tuple[tuple[int, ...], MPoly]]:
    """Each elementary cycle once, written from its smallest vertex, with weight times t^length."""
    t = MPoly.var("t")
    out: list[tuple[tuple[int, ...], MPoly]] = []

    def walk(start: int, path: list[int], weight: MPoly) -> None:
        for nxt, w in g.successors(path[-1]):
            if nxt == start:
                out.append((tuple(path), weight * w * t ** len(path)))
            elif nxt > start and nxt not in path:
                walk(start, path + [nxt], weight * w)

    for v in range(1, g.vertices + 1):
        walk(v, [v], MPoly.one())
    return out


def simple_paths(g: WeightedDigraph, i: int, j: int) -> list[tuple[tuple[int, ...], MPoly]]:
    """Self-avoiding walks from i to j, each with weight times t^edges."""
    t = MPoly.var("t")
    if i == j:
        return [((i,), MPoly.one())]
    out: list[tuple[tuple[int, ...], MPoly]] = []

    def walk(path: list[int], weight: MPoly) -> None:
        for nxt, w in g.successors(path[-1]):
            if nxt == j:
                out.append((tuple(path + [j]), weight * w * t ** len(path)))
            elif nxt not in path:
                walk(path + [nxt], weight * w)

    walk([i], MPoly.one())
    return out


def viennot_terms(g: WeightedDigraph, i: int, targets: Iterable[int]) -> tuple[MPoly, dict[int, MPoly]]:
    """D and the numerators N_{i,j} of the cycle-collection formula."""
    ts = g.check_targets(i, targets)
    if g.vertices > VIENNOT_MAX_VERTICES:
        raise GuardExceededError(
            f"cycle enumeration is limited to {VIENNOT_MAX_VERTICES} vertices (got {g.vertices})"
        )
    by_min: dict[int, list[tuple[int, MPoly]]] = {}
    for cycle, weight in elementary_cycles(g):
        mask = 0
        for v in cycle:
            mask |= 1 << (v - 1)
        by_min.setdefault(cycle[0], []).append((mask, weight))

    @lru_cache(maxsize=None)
    def alternating(avail: int) -> MPoly:
        if not avail:
            return MPoly.one()
        low = (avail & -avail).bit_length()
        total = alternating(avail & ~(1 << (low - 1)))
        for mask, weight in by_min.get(low, ()):
            if mask & avail == mask:
                total = total - weight * alternating(avail & ~mask)
        return total

    full = (1 << g.vertices) - 1
    numerators: dict[int, MPoly] = {}
    for j in ts:
        acc = MPoly.zero()
        for path, weight in simple_paths(g, i, j):
            mask = 0
            for v in path:
                mask |= 1 << (v - 1)
            acc = acc + weight * alternating(full & ~mask)
        numerators[j] = acc
    return alternating(full), numerators


def viennot_gf(g: WeightedDigraph, i: int, targets: Iterable[int]) -> RatFun:
    den, nums = viennot_terms(g, i, targets)
    num = MPoly.zero()
    for n in nums.values():
        num = num + n
    return RatFun.from_mpolys(num, den)
