"""P-partitions of natural posets and lattice points of rational cones."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from gfkit.domain.errors import ComputationError, GuardExceededError
from gfkit.domain.polynomials import UPolyT
from gfkit.domain.ratfun import RatFun
from gfkit.domain.series import TSeries

EXTENSION_MAX_K = 12
BRUTE_MAX_K = 12
BRUTE_MAX_ORDER = 60
CONE_MAX_DIM = 4
CONE_MAX_ORDER = 40

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class NaturalPoset:
    """Partial order on 1..k given by strict pairs (i, j) with i < j; stored transitively closed."""

    k: int
    relation: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ComputationError("poset size must be non-negative")
        pairs = set(self.relation)
        for i, j in pairs:
            if not (1 <= i <= self.k and 1 <= j <= self.k):
                raise ComputationError(f"pair ({i}, {j}) is outside 1..{self.k}")
            if i >= j:
                raise ComputationError(f"pair ({i}, {j}) breaks naturality (need i < j)")
        changed = True
        while changed:
            extra = {(i, l) for i, j in pairs for j2, l in pairs if j == j2} - pairs
            changed = bool(extra)
            pairs |= extra
        object.__setattr__(self, "relation", frozenset(pairs))

    @classmethod
    def from_pairs(cls, k: int, pairs: Iterable[tuple[int, int]]) -> "NaturalPoset":
        return cls(k, frozenset(pairs))

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.relation

    def predecessors(self, j: int) -> list[int]:
        return sorted(i for i, jj in self.relation if jj == j)

    def to_dict(self) -> dict:
        return {"k": self.k, "relation": [list(p) for p in sorted(self.relation)]}


@dataclass(frozen=True)
class PPartition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x < 0 for x in self.parts):
            raise ComputationError("P-partition parts must be non-negative")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def compatible_with(self, poset: NaturalPoset) -> bool:
        return all(self.parts[i - 1] <= self.parts[j - 1] for i, j in poset.relation)


@dataclass(frozen=True)
class HalfspaceSystem:
    """Constraints c . alpha >= 0 on non-negative integer points of Z^m."""

    m: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ComputationError("dimension must be at least 1")
        for row in self.rows:
            if len(row) != self.m:
                raise ComputationError(f"constraint {list(row)} does not have {self.m} coefficients")

    def satisfied(self, point: tuple[int, ...]) -> bool:
        return all(sum(c * a for c, a in zip(row, point)) >= 0 for row in self.rows)


def _guard_k(poset: NaturalPoset) -> None:
    if poset.k > EXTENSION_MAX_K:
        raise GuardExceededError(f"linear extensions are enumerated only for k <= {EXTENSION_MAX_K}")


def linear_extensions(poset: NaturalPoset) -> list[Permutation]:
    """Words sigma(1)..sigma(k) listing the elements so that i comes before j whenever i < j in P."""
    _guard_k(poset)
    preds = {j: set(poset.predecessors(j)) for j in range(1, poset.k + 1)}
    out: list[Permutation] = []

    def extend(prefix: list[int], placed: set[int]) -> None:
        if len(prefix) == poset.k:
            out.append(tuple(prefix))
            return
        for v in range(1, poset.k + 1):
            if v not in placed and preds[v] <= placed:
                placed.add(v)
                prefix.append(v)
                extend(prefix, placed)
                prefix.pop()
                placed.discard(v)

    extend([], set())
    return out


def sigma_data(sigma: Permutation, k: int) -> tuple[int, PPartition]:
    """e(sigma) and the minimal sigma-compatible P-partition lambda^(sigma,0)."""
    if sorted(sigma) != list(range(1, k + 1)):
        raise ComputationError(f"{sigma} is not a permutation of 1..{k}")
    descents = [i for i in range(1, k) if sigma[i - 1] > sigma[i]]
    e = sum(k - i for i in descents)
    parts = [0] * k
    for j in range(1, k + 1):
        parts[sigma[j - 1] - 1] = sum(1 for i in descents if i < j)
    return e, PPartition(tuple(parts))


def compatible_extension(poset: NaturalPoset, lam: PPartition) -> Permutation:
    """The unique linear extension whose class contains *lam*: elements sorted by (lambda_i, i)."""
    if len(lam.parts) != poset.k:
        raise ComputationError("P-partition length differs from the poset size")
    if not lam.compatible_with(poset):
        raise ComputationError(f"{lam.parts} is not a P-partition")
    return tuple(sorted(range(1, poset.k + 1), key=lambda i: (lam.parts[i - 1], i)))


def in_class(sigma: Permutation, lam: PPartition) -> bool:
    """lambda_{sigma(i)} <= lambda_{sigma(i+1)}, strictly when sigma(i) > sigma(i+1)."""
    for a, b in zip(sigma, sigma[1:]):
        la, lb = lam.parts[a - 1], lam.parts[b - 1]
        if la > lb or (a > b and la == lb):
            return False
    return True


def staircase_denominator(k: int) -> UPolyT:
    den = UPolyT([1])
    for i in range(1, k + 1):
        den = den * (UPolyT([1]) - UPolyT.monomial(i))
    return den


def p_partition_gf(poset: NaturalPoset) -> RatFun:
    """sum over linear extensions of t^e(sigma), over (1-t)(1-t^2)...(1-t^k)."""
    _guard_k(poset)
    num: list[int] = []
    for sigma in linear_extensions(poset):
        e, _ = sigma_data(sigma, poset.k)
        num += [0] * (e + 1 - len(num))
        num[e] += 1
    return RatFun(UPolyT(num), staircase_denominator(poset.k))


def p_partitions(poset: NaturalPoset, n_max: int) -> Iterable[PPartition]:
    """Every P-partition of weight <= n_max, assigning elements in increasing order."""
    k = poset.k
    preds = {j: poset.predecessors(j) for j in range(1, k + 1)}
    parts = [0] * k

    def assign(j: int, remaining: int):
        if j > k:
            yield PPartition(tuple(parts))
            return
        low = max((parts[i - 1] for i in preds[j]), default=0)
        for v in range(low, remaining + 1):
            parts[j - 1] = v
            yield from assign(j + 1, remaining - v)

    yield from assign(1, n_max)


def brute_p_partitions(poset: NaturalPoset, n_max: int) -> TSeries:
    if poset.k > BRUTE_MAX_K or n_max > BRUTE_MAX_ORDER:
        raise GuardExceededError(
            f"P-partition enumeration is limited to k <= {BRUTE_MAX_K}, weight <= {BRUTE_MAX_ORDER}"
        )
    counts = [0] * (n_max + 1)
    for lam in p_partitions(poset, n_max):
        counts[lam.weight] += 1
    return TSeries(tuple(Fraction(c) for c in counts), n_max)


def bounded_points(m: int, n_max: int) -> Iterable[tuple[int, ...]]:
    """Points of N^m with coordinate sum <= n_max."""
    if m == 0:
        yield ()
        return
    for first in range(n_max + 1):
        for rest in bounded_points(m - 1, n_max - first):
            yield (first,) + rest


def cone_points_bruteforce(h: HalfspaceSystem, n_max: int) -> TSeries:
    """Points of N^m satisfying every constraint, counted by coordinate sum."""
    if h.m > CONE_MAX_DIM or n_max > CONE_MAX_ORDER:
        raise GuardExceededError(f"cone enumeration is limited to m <= {CONE_MAX_DIM}, n <= {CONE_MAX_ORDER}")
    counts = [0] * (n_max + 1)
    for point in bounded_points(h.m, n_max):
        if h.satisfied(point):
            counts[sum(point)] += 1
    return TSeries(tuple(Fraction(c) for c in counts), n_max)
