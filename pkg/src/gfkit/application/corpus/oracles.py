"""Brute-force counters used as independent witnesses by the corpus suites.

None of these touch the generating-function engines: they enumerate objects
or run plain dynamic programmes over positions. They are slow on purpose and
each one is bounded by the suite that calls it.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator

from gfkit.domain.polynomials import MPoly

Point = tuple[int, int]


# ---------------------------------------------------------------------------
# Polyominoes and partitions
# ---------------------------------------------------------------------------
def column_convex_counts(n_max: int) -> list[int]:
    """cc-polyominoes by cells, built column by column.

    A column of height h' glued to one of height h can sit at h + h' - 1
    vertical offsets keeping at least one cell of contact.
    """
    last = [[0] * (n_max + 1) for _ in range(n_max + 1)]  # last[n][h]
    for n in range(1, n_max + 1):
        last[n][n] = 1
        for h_new in range(1, n):
            rest = n - h_new
            last[n][h_new] = sum(last[rest][h] * (h + h_new - 1) for h in range(1, rest + 1))
    return [sum(row) for row in last]


def lecture_hall_counts(k: int, n_max: int) -> list[int]:
    """k-tuples with 0 <= l1/1 <= l2/2 <= ... <= lk/k, by weight."""
    counts = [0] * (n_max + 1)

    def extend(i: int, prev: int, weight: int) -> None:
        if i > k:
            counts[weight] += 1
            return
        low = 0 if i == 1 else -(-i * prev // (i - 1))
        for part in range(low, n_max - weight + 1):
            extend(i + 1, part, weight + part)

    extend(1, 0, 0)
    return counts


# ---------------------------------------------------------------------------
# Lattice paths
# ---------------------------------------------------------------------------
def dyck_paths(n: int) -> Iterator[tuple[int, ...]]:
    """Height profiles (h_0, ..., h_2n) of Dyck paths of length 2n."""

    def walk(prefix: list[int], ups: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == 2 * n + 1:
            yield tuple(prefix)
            return
        h = prefix[-1]
        downs = len(prefix) - 1 - ups
        if ups < n:
            prefix.append(h + 1)
            yield from walk(prefix, ups + 1)
            prefix.pop()
        if h > 0 and downs < n:
            prefix.append(h - 1)
            yield from walk(prefix, ups)
            prefix.pop()

    yield from walk([0], 0)


def dyck_area_sum(n: int) -> int:
    """Total number of lattice points weakly below the Dyck paths of length 2n."""
    return sum(sum(h + 1 for h in heights) for heights in dyck_paths(n))


def plane_walk_counts(
    steps: tuple[Point, ...], length: int, allowed
) -> list[dict[Point, int]]:
    """counts[n][(i, j)] for walks from the origin whose every later vertex satisfies *allowed*."""
    layers: list[dict[Point, int]] = [{(0, 0): 1}]
    for _ in range(length):
        nxt: dict[Point, int] = {}
        for (x, y), c in layers[-1].items():
            for dx, dy in steps:
                p = (x + dx, y + dy)
                if allowed(p):
                    nxt[p] = nxt.get(p, 0) + c
        layers.append(nxt)
    return layers


KREWERAS_STEPS: tuple[Point, ...] = ((1, 1), (-1, 0), (0, -1))
SQUARE_STEPS: tuple[Point, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))


def quarter_plane(p: Point) -> bool:
    return p[0] >= 0 and p[1] >= 0


def off_slit(p: Point) -> bool:
    return not (p[1] == 0 and p[0] <= 0)


def layer_polynomial(layer: dict[Point, int], shift: int = 0) -> MPoly:
    """sum c * u^(i+shift) * v^(j+shift)."""
    return MPoly({(("u", i + shift), ("v", j + shift)): c for (i, j), c in layer.items()})


# ---------------------------------------------------------------------------
# Directed animals
# ---------------------------------------------------------------------------
def directed_animals(n_max: int, sources: int | None = None) -> list[int]:
    """Square-lattice directed animals by size.

    With *sources* None every compact source size k >= 1 is counted (source
    points (-i, i), 0 <= i < k); otherwise only that source size.
    """
    counts = [0] * (n_max + 1)
    sizes = range(1, n_max + 1) if sources is None else [sources]
    for k in sizes:
        if k > n_max:
            continue
        layer = {frozenset((-i, i) for i in range(k))}
        for size in range(k, n_max + 1):
            counts[size] += len(layer)
            if size == n_max:
                break
            grown: set[frozenset[Point]] = set()
            for animal in layer:
                for x, y in animal:
                    for p in ((x + 1, y), (x, y + 1)):
                        if p not in animal:
                            grown.add(animal | {p})
            layer = grown
    return counts


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------
def embedded_tree_polynomials(n_max: int, j: int) -> list[MPoly]:
    """[t^n] of binary trees with u marking nodes at abscissa j (left child -1, right child +1)."""

    @lru_cache(maxsize=None)
    def trees(n: int, abscissa: int) -> MPoly:
        if n == 0:
            return MPoly.one()
        mark = MPoly.var("u") if abscissa == j else MPoly.one()
        total = MPoly.zero()
        for left in range(n):
            total = total + trees(left, abscissa - 1) * trees(n - 1 - left, abscissa + 1)
        return total * mark

    return [trees(n, 0) for n in range(n_max + 1)]


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------
def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def kreweras_axis(i: int, n: int) -> int:
    """Quarter-plane Kreweras walks of length 3n + 2i ending at (i, 0)."""
    num = 4 ** n * (2 * i + 1) * comb(2 * i, i) * comb(3 * n + 2 * i, n)
    den = (n + i + 1) * (2 * n + 2 * i + 1)
    return num // den


def square_quarter_returns(n: int) -> int:
    return comb(2 * n + 2, n + 1) ** 2 // ((2 * n + 1) * (2 * n + 4))


def maps_count(n: int) -> int:
    return 2 * 3 ** n * comb(2 * n, n) // ((n + 1) * (n + 2))


def triangulation_count(n: int) -> int:
    return 2 ** n * comb(3 * n, n) // ((n + 1) * (2 * n + 1))


def three_connected_count(n: int) -> int:
    return 2 * comb(4 * n + 1, n) // ((n + 1) * (3 * n + 2))
