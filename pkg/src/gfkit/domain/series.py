"""Truncated power series in t.

A ``TSeries`` knows its coefficients of t^0..t^N exactly and nothing beyond
N. Every operation propagates the order pessimistically: a result never
claims a coefficient its inputs do not determine.

Coefficients are ``Fraction`` or ``MPoly`` (polynomials in the other
variables). Series whose coefficients are all rational use integer
Kronecker substitution for products and Newton iteration for reciprocals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Mapping, Sequence

from gfkit.domain.errors import ComputationError, NotInvertibleError
from gfkit.domain.polynomials import (
    Coeff,
    MPoly,
    UPolyT,
    as_coeff,
    coeff_exact_div,
    coeff_str,
    to_mpoly,
)

_KRONECKER_MIN = 12


# ---------------------------------------------------------------------------
# Raw coefficient-list kernels
# ---------------------------------------------------------------------------
def _is_scalar(cs: Sequence[Coeff]) -> bool:
    return all(isinstance(c, Fraction) for c in cs)


def _to_bytes_vec(vals: list[int], width: int) -> int:
    return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in vals), "little")


def _from_bytes_vec(x: int, width: int, count: int) -> list[int]:
    raw = x.to_bytes(width * count, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(count)]


def _kronecker(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    la = lcm(*(c.denominator for c in a))
    lb = lcm(*(c.denominator for c in b))
    ia = [int(c * la) for c in a]
    ib = [int(c * lb) for c in b]
    bits = (
        max(abs(v) for v in ia).bit_length()
        + max(abs(v) for v in ib).bit_length()
        + min(len(ia), len(ib)).bit_length()
        + 1
    )
    width = bits // 8 + 1
    count = len(ia) + len(ib) - 1

    def split(vals: list[int]) -> tuple[int, int]:
        pos = _to_bytes_vec([v if v > 0 else 0 for v in vals], width)
        neg = _to_bytes_vec([-v if v < 0 else 0 for v in vals], width)
        return pos, neg

    ap, an = split(ia)
    bp, bn = split(ib)
    plus = _from_bytes_vec(ap * bp + an * bn, width, count)
    minus = _from_bytes_vec(ap * bn + an * bp, width, count)
    scale = la * lb
    out = [Fraction(plus[k] - minus[k], scale) for k in range(min(count, n + 1))]
    return out + [Fraction(0)] * (n + 1 - len(out))


def mul_lists(a: Sequence[Coeff], b: Sequence[Coeff], n: int) -> list[Coeff]:
    """First n+1 coefficients of the product of two coefficient lists."""
    a = list(a[: n + 1])
    b = list(b[: n + 1])
    if not a or not b:
        return [Fraction(0)] * (n + 1)
    if min(len(a), len(b)) >= _KRONECKER_MIN and _is_scalar(a) and _is_scalar(b):
        if not any(a) or not any(b):
            return [Fraction(0)] * (n + 1)
        return _kronecker(a, b, n)  # type: ignore[arg-type]
    out: list = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(min(len(b), n + 1 - i)):
            y = b[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return [as_coeff(c) for c in out]


def _invert_scalar(a: list[Fraction], n: int) -> list[Fraction]:
    inv = [1 / a[0]]
    prec = 0
    while prec < n:
        prec = min(2 * prec + 1, n)
        ab = mul_lists(a[: prec + 1], inv, prec)
        err = [-c for c in ab]
        err[0] += 1
        corr = mul_lists(inv, err, prec)
        inv = [(inv[k] if k < len(inv) else Fraction(0)) + corr[k] for k in range(prec + 1)]
    return inv  # type: ignore[return-value]


def _invert_generic(a: list[Coeff], n: int) -> list[Coeff]:
    a0 = a[0]
    b: list[Coeff] = [1 / a0]  # type: ignore[operator]
    for m in range(1, n + 1):
        acc: Coeff = Fraction(0)
        for k in range(1, min(m, len(a) - 1) + 1):
            if a[k] and b[m - k]:
                acc = acc + a[k] * b[m - k]
        b.append(as_coeff(-acc / a0))  # type: ignore[operator]
    return b


# ---------------------------------------------------------------------------
# TSeries
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class TSeries:
    """Power series in t known exactly up to and including t^order."""

    coeffs: tuple
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ComputationError(f"truncation order must be >= 0, got {self.order}")
        cs = [as_coeff(c) for c in list(self.coeffs)[: self.order + 1]]
        cs += [Fraction(0)] * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors --------------------------------------------------------
    @classmethod
    def of(cls, coeffs: Iterable[object], order: int | None = None) -> "TSeries":
        cs = list(coeffs)
        return cls(tuple(cs), len(cs) - 1 if order is None else order)

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls((), order)

    @classmethod
    def const(cls, c: object, order: int) -> "TSeries":
        return cls((c,), order)

    @classmethod
    def t(cls, order: int) -> "TSeries":
        return cls((0, 1), order)

    @classmethod
    def from_poly(cls, p: "UPolyT | MPoly", order: int, var: str = "t") -> "TSeries":
        up = p if isinstance(p, UPolyT) else UPolyT.from_mpoly(p, var)
        return cls(up.coeffs, order)

    # -- inspection ----------------------------------------------------------
    def __getitem__(self, n: int) -> Coeff:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise ComputationError(f"coefficient t^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    @property
    def is_scalar(self) -> bool:
        return _is_scalar(self.coeffs)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; order+1 if none is known."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    def truncate(self, n: int) -> "TSeries":
        return TSeries(self.coeffs, min(n, self.order))

    def scalars(self) -> list[Fraction]:
        if not self.is_scalar:
            raise ComputationError("series has non-rational coefficients")
        return list(self.coeffs)

    # -- ring operations -----------------------------------------------------
    @staticmethod
    def _coerce(other: object, order: int) -> "TSeries | None":
        if isinstance(other, TSeries):
            return other
        if isinstance(other, (int, Fraction, MPoly)):
            return TSeries.const(other, order)
        return None

    def __add__(self, other: object) -> "TSeries":
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return TSeries(tuple(self.coeffs[k] + o.coeffs[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self) -> "TSeries":
        return TSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: object) -> "TSeries":
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "TSeries":
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "TSeries":
        if isinstance(other, (int, Fraction, MPoly)):
            c = as_coeff(other)
            return TSeries(tuple(x * c for x in self.coeffs), self.order)
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order + other.valuation(), other.order + self.valuation())
        return TSeries(tuple(mul_lists(self.coeffs, other.coeffs, n)), n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TSeries":
        if k < 0:
            return self.invert() ** (-k)
        result: TSeries = TSeries.const(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "TSeries":
        """Multiply by t^k."""
        return TSeries((0,) * k + self.coeffs, self.order + k)

    def invert(self) -> "TSeries":
        a0 = self.coeffs[0]
        if not isinstance(a0, Fraction) or not a0:
            raise NotInvertibleError(f"constant term {coeff_str(a0)} is not invertible")
        cs = list(self.coeffs)
        if self.is_scalar and self.order >= _KRONECKER_MIN:
            return TSeries(tuple(_invert_scalar(cs, self.order)), self.order)
        return TSeries(tuple(_invert_generic(cs, self.order)), self.order)

    def __truediv__(self, other: object) -> "TSeries":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise NotInvertibleError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, TSeries):
            return self.divide(other)
        return NotImplemented

    def divide(self, other: "TSeries") -> "TSeries":
        """Exact series quotient; the divisor may have positive valuation and a polynomial leading coefficient."""
        v = other.valuation()
        if v > other.order:
            raise NotInvertibleError("division by a series that is zero to its order")
        if self.valuation() < v:
            raise NotInvertibleError(f"dividend has valuation below the divisor's ({v})")
        a = self.coeffs[v:]
        b = other.coeffs[v:]
        n = min(self.order, other.order) - v
        if _is_scalar(b) and n >= _KRONECKER_MIN:
            return TSeries(tuple(mul_lists(a, _invert_scalar(list(b), n), n)), n)
        lead = b[0]
        q: list[Coeff] = []
        for m in range(n + 1):
            acc = a[m] if m < len(a) else Fraction(0)
            for k in range(1, min(m, len(b) - 1) + 1):
                if b[k] and q[m - k]:
                    acc = acc - b[k] * q[m - k]
            q.append(coeff_exact_div(as_coeff(acc), lead))
        return TSeries(tuple(q), n)

    def sqrt(self) -> "TSeries":
        if self.coeffs[0] != 1:
            raise NotInvertibleError("sqrt needs constant term 1")
        b: list[Coeff] = [Fraction(1)]
        for m in range(1, self.order + 1):
            acc: Coeff = self.coeffs[m]
            for k in range(1, m):
                if b[k] and b[m - k]:
                    acc = acc - b[k] * b[m - k]
            b.append(as_coeff(acc / 2))
        return TSeries(tuple(b), self.order)

    def derive(self) -> "TSeries":
        if self.order == 0:
            raise ComputationError("derivative of an order-0 series has no known coefficients")
        return TSeries(tuple(k * self.coeffs[k] for k in range(1, self.order + 1)), self.order - 1)

    def compose(self, inner: "TSeries") -> "TSeries":
        """self(inner(t)); inner must have zero constant term."""
        if inner.coeffs[0]:
            raise ComputationError("composition needs an inner series with zero constant term")
        vb = inner.valuation()
        n = min(inner.order, (self.order + 1) * vb - 1)
        acc: list[Coeff] = [self.coeffs[self.order]]
        for k in range(self.order - 1, -1, -1):
            acc = mul_lists(acc, inner.coeffs, n)
            acc[0] = as_coeff(acc[0] + self.coeffs[k])
        return TSeries(tuple(acc), n)

    def quasi_inverse(self) -> "TSeries":
        """A* = 1/(1 - A), for A with zero constant term."""
        if self.coeffs[0]:
            raise ComputationError("quasi-inverse needs zero constant term")
        return (1 - self).invert()

    # -- coefficient maps ----------------------------------------------------
    def map(self, fn: Callable[[Coeff], object]) -> "TSeries":
        return TSeries(tuple(fn(c) for c in self.coeffs), self.order)

    def evaluate(self, values: Mapping[str, "MPoly | int | Fraction"]) -> "TSeries":
        """Substitute values for the non-t variables of every coefficient."""
        return self.map(lambda c: to_mpoly(c).evaluate(values))

    def inflate(self, p: int) -> "TSeries":
        """Substitute t -> t^p."""
        out: list[Coeff] = [Fraction(0)] * (p * self.order + p)
        for k, c in enumerate(self.coeffs):
            out[p * k] = c
        return TSeries(tuple(out), p * self.order + p - 1)

    # -- text ----------------------------------------------------------------
    def coefficient_strings(self) -> list[str]:
        return [coeff_str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            body = coeff_str(c)
            if isinstance(c, MPoly) and len(c.terms) > 1:
                body = f"({body})"
            if k == 0:
                terms.append(body)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                terms.append(mono if body == "1" else f"-{mono}" if body == "-1" else f"{body}*{mono}")
        terms.append(f"O(t^{self.order + 1})")
        out = terms[0]
        for p in terms[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


# ---------------------------------------------------------------------------
# Operations on series
# ---------------------------------------------------------------------------
SERIES_OPS = ("add", "sub", "mul", "invert", "sqrt", "derive", "compose", "star")


def series_arith(op: str, a: TSeries, b: TSeries | None = None) -> TSeries:
    """Dispatch one of ``SERIES_OPS``; binary operations need *b*."""
    if op in ("add", "sub", "mul", "compose"):
        if b is None:
            raise ComputationError(f"series operation {op!r} needs two operands")
        return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "compose": a.compose}[op](b)
    if op == "invert":
        return a.invert()
    if op == "sqrt":
        return a.sqrt()
    if op == "derive":
        return a.derive()
    if op == "star":
        return a.quasi_inverse()
    raise ComputationError(f"unknown series operation {op!r}")


def substitute(poly: MPoly, values: Mapping[str, TSeries], order: int) -> TSeries:
    """Evaluate *poly* with series substituted for some variables.

    Variables without a value stay inside the coefficients; ``t`` is the
    series variable itself unless it is given a value.
    """
    cache: dict[tuple[str, int], TSeries] = {}
    t_series = values.get("t", TSeries.t(order))

    def power(v: str, e: int) -> TSeries:
        key = (v, e)
        if key not in cache:
            base = t_series if v == "t" else values[v]
            cache[key] = base ** e if e > 1 else base
        return cache[key]

    total = TSeries.zero(order)
    for mono, c in poly.terms.items():
        rest: dict[str, int] = {}
        factors: list[TSeries] = []
        t_shift = 0
        for v, e in mono:
            if v in values:
                factors.append(power(v, e))
            elif v == "t":
                t_shift = e
            else:
                rest[v] = e
        coeff: Coeff = as_coeff(MPoly({tuple(sorted(rest.items())): c})) if rest else c
        if not factors:
            term = TSeries.const(coeff, order)
        else:
            term = factors[0] * coeff
            for f in factors[1:]:
                term = term * f
        if t_shift:
            term = term.shift(t_shift)
        total = total + term
    return total.truncate(order)


def fixed_point(step: Callable[[TSeries], TSeries], order: int, start: TSeries | None = None) -> TSeries:
    """Iterate *step* from *start* (default 0) until the series stops changing mod t^(order+1)."""
    current = start if start is not None else TSeries.zero(order)
    for _ in range(order + 2):
        nxt = step(current).truncate(order)
        if nxt.order < order:
            raise ComputationError("iteration lost truncation order; the map is not a t-adic contraction")
        if nxt == current:
            return nxt
        current = nxt
    raise ComputationError(f"iteration did not stabilise within {order + 2} passes")
