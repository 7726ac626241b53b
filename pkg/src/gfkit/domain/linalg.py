"""Exact linear algebra: Bareiss determinants, Sylvester resultants, nullspaces over Q."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from gfkit.domain.errors import ComputationError
from gfkit.domain.polynomials import MPoly, to_mpoly


def det_bareiss(matrix: Sequence[Sequence[object]]) -> MPoly:
    """Determinant by fraction-free elimination; every division is exact in the ring."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ComputationError("determinant of a non-square matrix")
    if n == 0:
        return MPoly.one()
    a = [[to_mpoly(x) for x in row] for row in matrix]
    sign = 1
    prev = MPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero:
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero), None)
            if swap is None:
                return MPoly.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]).exact_div(prev)
        prev = pivot
    return a[n - 1][n - 1] * sign


def sylvester_matrix(p: MPoly, q: MPoly, var: str) -> list[list[MPoly]]:
    m, n = p.degree(var), q.degree(var)
    pc = p.as_univariate(var)
    qc = q.as_univariate(var)
    p_row = [pc.get(k, MPoly.zero()) for k in range(m, -1, -1)]
    q_row = [qc.get(k, MPoly.zero()) for k in range(n, -1, -1)]
    size = m + n
    rows: list[list[MPoly]] = []
    for i in range(n):
        rows.append([MPoly.zero()] * i + p_row + [MPoly.zero()] * (size - m - 1 - i))
    for i in range(m):
        rows.append([MPoly.zero()] * i + q_row + [MPoly.zero()] * (size - n - 1 - i))
    return rows


def resultant(p: MPoly, q: MPoly, var: str = "a") -> MPoly:
    """Sylvester resultant of p and q with respect to *var*."""
    if p.is_zero or q.is_zero:
        raise ComputationError("resultant of a zero polynomial")
    return det_bareiss(sylvester_matrix(p, q, var))


def discriminant(p: MPoly, var: str = "a") -> MPoly:
    """(-1)^(n(n-1)/2) * Res(p, dp/dvar) / lc(p); degree-1 input gives 1."""
    if p.is_zero:
        raise ComputationError("discriminant of the zero polynomial")
    n = p.degree(var)
    if n < 1:
        raise ComputationError(f"discriminant needs positive degree in {var}")
    if n == 1:
        return MPoly.one()
    res = resultant(p, p.derivative(var), var)
    if (n * (n - 1) // 2) % 2:
        res = -res
    return res.exact_div(p.coefficient(var, n))


# ---------------------------------------------------------------------------
# Nullspace over Q
# ---------------------------------------------------------------------------
def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
    return [v // g for v in row] if g > 1 else row


def row_echelon(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gauss-Jordan elimination on integer-scaled rows.

    Returns the reduced rows (one per pivot) and the pivot columns.
    """
    work: list[list[int]] = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        ints = _primitive([int(x * den) for x in fr])
        if any(ints):
            work.append(ints)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(work)) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        piv = work[r]
        for i in range(len(work)):
            if i != r and work[i][c]:
                a, b = piv[c], work[i][c]
                work[i] = _primitive([a * x - b * y for x, y in zip(work[i], piv)])
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : rows . v = 0}, one vector per free column, in column order."""
    reduced, pivots = row_echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis: list[list[Fraction]] = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = Fraction(-row[f], row[pc])
        basis.append(v)
    return basis
