"""Sparse multivariate polynomials over Q and dense polynomials in t.

``MPoly`` is the coefficient ring of everything else in gfkit. Constants are
interchangeable with ``Fraction``: arithmetic accepts ints and Fractions, and
``as_coeff`` collapses constant polynomials back to ``Fraction`` so that
scalar-only series stay on the fast path.

Monomials are tuples of ``(variable, exponent)`` pairs with positive
exponents, sorted so that variables earlier in ``VARIABLE_ORDER`` come first.
The term order is graded lexicographic with that variable order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

from gfkit.domain.errors import ComputationError, NotInvertibleError

VARIABLE_ORDER: tuple[str, ...] = ("t", "x", "y", "u", "v", "s")

Monomial = tuple[tuple[str, int], ...]
Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def variable_key(name: str) -> tuple:
    """Sort key of a variable; larger keys come first and dominate the lex order."""
    if name in VARIABLE_ORDER:
        return (1, -VARIABLE_ORDER.index(name))
    return (0, tuple(-ord(ch) for ch in name))


def _mono(exps: Mapping[str, int]) -> Monomial:
    return tuple(
        sorted(((v, e) for v, e in exps.items() if e), key=lambda ve: variable_key(ve[0]), reverse=True)
    )


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return _mono(exps)


def _mono_div(m: Monomial, d: Monomial) -> Monomial | None:
    exps = dict(m)
    for v, e in d:
        have = exps.get(v, 0)
        if have < e:
            return None
        exps[v] = have - e
    return _mono(exps)


def monomial_key(m: Monomial) -> tuple:
    """Graded-lex key: compare total degree, then exponents variable by variable."""
    return (sum(e for _, e in m), tuple((variable_key(v), e) for v, e in m))


def format_scalar(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class MPoly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None) -> None:
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = _mono(dict(m))
                clean[key] = clean.get(key, Fraction(0)) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, terms: dict[Monomial, Fraction]) -> "MPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "MPoly":
        c = Fraction(c)
        return cls._wrap({(): c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "MPoly":
        if exp < 0:
            raise ValueError(f"negative exponent for {name}")
        return cls._wrap({((name, exp),) if exp else (): Fraction(1)})

    @classmethod
    def zero(cls) -> "MPoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "MPoly":
        return cls._wrap({(): Fraction(1)})

    # -- inspection ----------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def scalar(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.is_constant:
            raise ComputationError(f"expected a rational constant, got {self}")
        return self.constant_term()

    @property
    def variables(self) -> tuple[str, ...]:
        names = {v for m in self._terms for v, _ in m}
        return tuple(sorted(names, key=variable_key, reverse=True))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in *var*; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self._terms)
        return max(dict(m).get(var, 0) for m in self._terms)

    def sorted_terms(self, descending: bool = True) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: monomial_key(mc[0]), reverse=descending)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ComputationError("zero polynomial has no leading term")
        m = max(self._terms, key=monomial_key)
        return m, self._terms[m]

    def coefficients(self) -> Iterator[Fraction]:
        return iter(self._terms.values())

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other: object) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other)
        return None

    def __add__(self, other: object) -> "MPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "MPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "MPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MPoly.zero()
            return MPoly._wrap({m: v * c for m, v in self._terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise NotInvertibleError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, MPoly) and other.is_constant:
            return self / other.scalar()
        return NotImplemented

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = MPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: "MPoly | Scalar") -> "MPoly":
        """Quotient of an exact division; raises if *other* does not divide *self*."""
        o = self._coerce(other)
        if o is None or o.is_zero:
            raise NotInvertibleError("division by the zero polynomial")
        if o.is_constant:
            return self / o.scalar()
        lm, lc = o.leading_term()
        rem = dict(self._terms)
        quot: dict[Monomial, Fraction] = {}
        while rem:
            m = max(rem, key=monomial_key)
            qm = _mono_div(m, lm)
            if qm is None:
                raise ComputationError(f"{o} does not divide {self}")
            qc = rem[m] / lc
            quot[qm] = qc
            for om, oc in o._terms.items():
                mm = _mono_mul(qm, om)
                v = rem.get(mm, 0) - qc * oc
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return MPoly._wrap(quot)

    # -- structure -----------------------------------------------------------
    def coefficient(self, var: str, k: int) -> "MPoly":
        """Coefficient of var^k, as a polynomial free of *var*."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            exps = dict(m)
            if exps.get(var, 0) == k:
                exps.pop(var, None)
                out[_mono(exps)] = c
        return MPoly._wrap(out)

    def as_univariate(self, var: str) -> dict[int, "MPoly"]:
        """Split into {k: coefficient of var^k}."""
        parts: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            exps = dict(m)
            k = exps.pop(var, 0)
            parts.setdefault(k, {})[_mono(exps)] = c
        return {k: MPoly._wrap(p) for k, p in parts.items()}

    def derivative(self, var: str) -> "MPoly":
        out: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            exps = dict(m)
            e = exps.get(var, 0)
            if e:
                exps[var] = e - 1
                out[_mono(exps)] = c * e
        return MPoly._wrap(out)

    def evaluate(self, values: Mapping[str, "MPoly | Scalar"]) -> "MPoly":
        """Substitute polynomials (or scalars) for some variables."""
        if not any(v in values for v in self.variables):
            return self
        cache: dict[tuple[str, int], MPoly] = {}

        def power(v: str, e: int) -> MPoly:
            key = (v, e)
            if key not in cache:
                base = values[v]
                cache[key] = (base if isinstance(base, MPoly) else MPoly.const(base)) ** e
            return cache[key]

        total = MPoly.zero()
        for m, c in self._terms.items():
            rest: dict[str, int] = {}
            term = MPoly.const(c)
            for v, e in m:
                if v in values:
                    term = term * power(v, e)
                else:
                    rest[v] = e
            if rest:
                term = term * MPoly._wrap({_mono(rest): Fraction(1)})
            total = total + term
        return total

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant:
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- text ----------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = [_format_term(m, c) for m, c in self.sorted_terms()]
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"


def _format_term(m: Monomial, c: Fraction) -> str:
    mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
    if not mono:
        return format_scalar(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{format_scalar(c)}*{mono}"


Coeff = Union[Fraction, MPoly]


def as_coeff(c: object) -> Coeff:
    """Normalise a ring element: constants become Fraction, the rest stay MPoly."""
    if isinstance(c, MPoly):
        if not c._terms:
            return Fraction(0)
        if len(c._terms) == 1 and () in c._terms:
            return c._terms[()]
        return c
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    raise TypeError(f"not a coefficient: {c!r}")


def to_mpoly(c: object) -> MPoly:
    if isinstance(c, MPoly):
        return c
    return MPoly.const(c)  # type: ignore[arg-type]


def coeff_str(c: Coeff) -> str:
    return format_scalar(c) if isinstance(c, Fraction) else str(c)


def coeff_exact_div(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(b, Fraction):
        if not b:
            raise NotInvertibleError("division by zero")
        return as_coeff(a / b)
    return as_coeff(to_mpoly(a).exact_div(b))


# ---------------------------------------------------------------------------
# Dense polynomials in t
# ---------------------------------------------------------------------------
class UPolyT:
    """Polynomial in t with coefficients free of t (Fraction or MPoly)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[object] = ()) -> None:
        cs = [as_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Coeff, ...] = tuple(cs)

    @classmethod
    def from_mpoly(cls, p: MPoly, var: str = "t") -> "UPolyT":
        parts = p.as_univariate(var)
        if not parts:
            return cls()
        dense: list[object] = [Fraction(0)] * (max(parts) + 1)
        for k, c in parts.items():
            dense[k] = c
        return cls(dense)

    @classmethod
    def monomial(cls, k: int, c: object = 1) -> "UPolyT":
        return cls([0] * k + [c])

    def to_mpoly(self, var: str = "t") -> MPoly:
        total = MPoly.zero()
        for k, c in enumerate(self.coeffs):
            if c:
                total = total + to_mpoly(c) * MPoly.var(var, k)
        return total

    # -- inspection ----------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def __getitem__(self, k: int) -> Coeff:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading(self) -> Coeff:
        if not self.coeffs:
            raise ComputationError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other: object) -> "UPolyT | None":
        if isinstance(other, UPolyT):
            return other
        if isinstance(other, (int, Fraction, MPoly)):
            return UPolyT([other])
        return None

    def __add__(self, other: object) -> "UPolyT":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UPolyT([self[k] + o[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UPolyT":
        return UPolyT([-c for c in self.coeffs])

    def __sub__(self, other: object) -> "UPolyT":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "UPolyT":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "UPolyT":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UPolyT()
        out: list[object] = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UPolyT(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UPolyT":
        result, base = UPolyT([1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "UPolyT":
        """Multiply by t^k."""
        return UPolyT([0] * k + list(self.coeffs)) if self.coeffs else UPolyT()

    def inflate(self, p: int) -> "UPolyT":
        """Substitute t -> t^p."""
        out: list[object] = [0] * (p * max(self.degree, 0) + 1)
        for k, c in enumerate(self.coeffs):
            out[p * k] = c
        return UPolyT(out)

    def derivative(self) -> "UPolyT":
        return UPolyT([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, value):
        """Horner evaluation at a scalar (Fraction, int, or an mpmath number)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + (c if not isinstance(c, Fraction) else _scalar_for(c, value))
        return acc

    def evaluate(self, values: Mapping[str, "MPoly | Scalar"]) -> "UPolyT":
        return UPolyT([to_mpoly(c).evaluate(values) for c in self.coeffs])

    # -- Euclidean structure over Q -------------------------------------------
    def _require_rational(self) -> None:
        if not self.is_rational:
            raise ComputationError("operation needs rational coefficients")

    def divmod(self, other: "UPolyT") -> tuple["UPolyT", "UPolyT"]:
        self._require_rational()
        other._require_rational()
        if other.is_zero:
            raise NotInvertibleError("polynomial division by zero")
        dn = other.degree
        lc = other.coeffs[-1]
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - dn, 0)
        for k in range(len(rem) - 1, dn - 1, -1):
            c = rem[k] / lc
            if c:
                quot[k - dn] = c
                for j, oc in enumerate(other.coeffs):
                    rem[k - dn + j] -= c * oc
        return UPolyT(quot), UPolyT(rem[:dn])

    def __floordiv__(self, other: "UPolyT") -> "UPolyT":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPolyT") -> "UPolyT":
        return self.divmod(other)[1]

    def monic(self) -> "UPolyT":
        if self.is_zero:
            return self
        lc = self.coeffs[-1]
        return UPolyT([c / lc for c in self.coeffs])

    def gcd(self, other: "UPolyT") -> "UPolyT":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def squarefree_decomposition(self) -> list[tuple["UPolyT", int]]:
        """Yun's algorithm: monic squarefree factors a_i with self = c * prod a_i^i."""
        self._require_rational()
        if self.degree < 1:
            return []
        a0 = self.gcd(self.derivative())
        b = self // a0
        d = (self.derivative() // a0) - b.derivative()
        out: list[tuple[UPolyT, int]] = []
        i = 1
        while b.degree > 0:
            a = b.gcd(d)
            b = b // a
            c = d // a
            d = c - b.derivative()
            if a.degree > 0:
                out.append((a, i))
            i += 1
        return out

    # -- comparison / text ----------------------------------------------------
    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        return str(self.to_mpoly())

    def __repr__(self) -> str:
        return f"UPolyT({str(self)!r})"


def _scalar_for(c: Fraction, value):
    """Convert a rational coefficient into the number type of *value*."""
    if isinstance(value, (int, Fraction)):
        return c
    return value.__class__(c.numerator) / c.denominator if c.denominator != 1 else c.numerator
