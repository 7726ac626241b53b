"""Proper polynomial systems, context-free grammars and Lagrange inversion.

A system ``A_i = P_i(t, A_1, ..., A_k)`` is proper when no P_i has a constant
term or a bare linear monomial A_j. Proper systems have a unique solution in
series without constant term (the canonical solution), reached by t-adic
fixed-point iteration: each pass fixes one more coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from gfkit.domain.errors import ComputationError, GuardExceededError, ImproperSystemError
from gfkit.domain.polynomials import Monomial, MPoly
from gfkit.domain.series import TSeries, substitute

LANGUAGE_MAX_LENGTH = 14


def _split(mono: Monomial, unknowns: frozenset[str]) -> tuple[int, dict[str, int], dict[str, int]]:
    """(t exponent, unknown exponents, parameter exponents) of a monomial."""
    t_exp = 0
    unk: dict[str, int] = {}
    par: dict[str, int] = {}
    for v, e in mono:
        if v == "t":
            t_exp = e
        elif v in unknowns:
            unk[v] = e
        else:
            par[v] = e
    return t_exp, unk, par


def _param_poly(par: dict[str, int], c: Fraction) -> MPoly:
    return MPoly({tuple(par.items()): c})


@dataclass(frozen=True)
class PolySystem:
    """Equations A_i = P_i; variables other than t and the unknowns are parameters."""

    unknowns: tuple[str, ...]
    equations: tuple[MPoly, ...]

    def __post_init__(self) -> None:
        if not self.unknowns:
            raise ComputationError("a system needs at least one unknown")
        if len(self.unknowns) != len(self.equations):
            raise ComputationError("one equation per unknown is required")
        if len(set(self.unknowns)) != len(self.unknowns):
            raise ComputationError("unknown names must be distinct")
        if "t" in self.unknowns:
            raise ComputationError("'t' is the series variable and cannot be an unknown")

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, MPoly]]) -> "PolySystem":
        items = list(pairs)
        return cls(tuple(n for n, _ in items), tuple(p for _, p in items))

    @property
    def k(self) -> int:
        return len(self.unknowns)

    @property
    def positive(self) -> bool:
        return all(c > 0 for p in self.equations for c in p.coefficients())

    def equation(self, name: str) -> MPoly:
        return self.equations[self.unknowns.index(name)]

    def improper_reasons(self) -> list[str]:
        unknowns = frozenset(self.unknowns)
        reasons: list[str] = []
        for name, p in zip(self.unknowns, self.equations):
            for mono in p.terms:
                t_exp, unk, _ = _split(mono, unknowns)
                if t_exp or sum(unk.values()) >= 2:
                    continue
                if not unk:
                    reasons.append(f"{name}: constant term")
                else:
                    reasons.append(f"{name}: linear term {next(iter(unk))}")
        return reasons

    @property
    def is_proper(self) -> bool:
        return not self.improper_reasons()

    def require_proper(self) -> None:
        reasons = self.improper_reasons()
        if reasons:
            raise ImproperSystemError("improper system (" + "; ".join(reasons) + ")")

    @property
    def is_quadratic(self) -> bool:
        """Every monomial is c*t or c*A_l*A_m (c may carry parameters)."""
        unknowns = frozenset(self.unknowns)
        for p in self.equations:
            for mono in p.terms:
                t_exp, unk, _ = _split(mono, unknowns)
                if not ((t_exp == 1 and not unk) or (t_exp == 0 and sum(unk.values()) == 2)):
                    return False
        return True

    def properized(self) -> "PolySystem":
        """Substitute bare linear monomials away while the linear dependencies are acyclic."""
        unknowns = frozenset(self.unknowns)
        eqs = dict(zip(self.unknowns, self.equations))
        for _ in range(self.k + 1):
            changed = False
            for name in self.unknowns:
                p = eqs[name]
                out = MPoly.zero()
                replaced = False
                for mono, c in p.terms.items():
                    t_exp, unk, par = _split(mono, unknowns)
                    if t_exp == 0 and sum(unk.values()) == 1:
                        dep = next(iter(unk))
                        if dep == name:
                            raise ImproperSystemError(f"{name} depends linearly on itself")
                        out = out + _param_poly(par, c) * eqs[dep]
                        replaced = True
                    else:
                        out = out + MPoly({mono: c})
                if replaced:
                    eqs[name] = out
                    changed = True
            if not changed:
                break
        result = PolySystem(self.unknowns, tuple(eqs[n] for n in self.unknowns))
        result.require_proper()
        return result

    def __str__(self) -> str:
        return "\n".join(f"{n} = {p}" for n, p in zip(self.unknowns, self.equations))

    def to_dict(self) -> dict:
        return {
            "unknowns": list(self.unknowns),
            "equations": [f"{n} = {p}" for n, p in zip(self.unknowns, self.equations)],
            "positive": self.positive,
        }


# ---------------------------------------------------------------------------
# Canonical solution
# ---------------------------------------------------------------------------
def _iterate(s: PolySystem, current: list[TSeries], order: int) -> list[TSeries]:
    values = {name: TSeries(a.coeffs, order) for name, a in zip(s.unknowns, current)}
    return [substitute(p, values, order) for p in s.equations]


def canonical_solution(s: PolySystem, n: int) -> list[TSeries]:
    """The solution without constant term, mod t^(n+1)."""
    s.require_proper()
    current = [TSeries.zero(0) for _ in s.unknowns]
    for m in range(1, n + 1):
        current = _iterate(s, current, m)
    if _iterate(s, current, n) != current:
        raise ComputationError("fixed-point iteration did not stabilise")
    return current


# ---------------------------------------------------------------------------
# Normal forms
# ---------------------------------------------------------------------------
class _Names:
    def __init__(self, taken: Iterable[str]) -> None:
        self.taken = set(taken) | {"t"}

    def fresh(self, stem: str) -> str:
        if stem not in self.taken:
            self.taken.add(stem)
            return stem
        k = 1
        while f"{stem}{k}" in self.taken:
            k += 1
        self.taken.add(f"{stem}{k}")
        return f"{stem}{k}"


def _quadratize(s: PolySystem) -> PolySystem:
    unknowns = frozenset(s.unknowns)
    names = _Names(s.unknowns)
    order = {n: i for i, n in enumerate(s.unknowns)}
    t_name: list[str] = []
    aux: dict[tuple[str, ...], str] = {}
    aux_eqs: list[tuple[str, MPoly]] = []

    def factor_var(f: str) -> MPoly:
        if f != "t":
            return MPoly.var(f)
        if not t_name:
            t_name.append(names.fresh("T"))
            aux_eqs.append((t_name[0], MPoly.var("t")))
        return MPoly.var(t_name[0])

    def product_var(factors: tuple[str, ...]) -> MPoly:
        if len(factors) == 1:
            return factor_var(factors[0])
        if factors not in aux:
            aux[factors] = names.fresh("U" + str(len(aux) + 1))
            placeholder = len(aux_eqs)
            aux_eqs.append((aux[factors], MPoly.zero()))
            aux_eqs[placeholder] = (aux[factors], split(factors))
        return MPoly.var(aux[factors])

    def split(factors: tuple[str, ...]) -> MPoly:
        h = len(factors) // 2
        return product_var(factors[:h]) * product_var(factors[h:])

    def rewrite(p: MPoly) -> MPoly:
        out = MPoly.zero()
        for mono, c in p.terms.items():
            t_exp, unk, par = _split(mono, unknowns)
            factors = ("t",) * t_exp + tuple(
                sorted((v for v, e in unk.items() for _ in range(e)), key=order.__getitem__)
            )
            coeff = _param_poly(par, c)
            if factors == ("t",):
                out = out + coeff * MPoly.var("t")
            else:
                out = out + coeff * split(factors)
        return out

    main = [(n, rewrite(p)) for n, p in zip(s.unknowns, s.equations)]
    return PolySystem.of(main + aux_eqs)


def _leading_t(s: PolySystem) -> PolySystem:
    unknowns = frozenset(s.unknowns)
    names = _Names(s.unknowns)
    linear: dict[str, MPoly] = {}
    pairs: dict[str, dict[tuple[str, str], MPoly]] = {}
    order = {n: i for i, n in enumerate(s.unknowns)}
    for name, p in zip(s.unknowns, s.equations):
        linear[name] = MPoly.zero()
        pairs[name] = {}
        for mono, c in p.terms.items():
            t_exp, unk, par = _split(mono, unknowns)
            coeff = _param_poly(par, c)
            if t_exp == 1 and not unk:
                linear[name] = linear[name] + coeff
            else:
                fs = sorted((v for v, e in unk.items() for _ in range(e)), key=order.__getitem__)
                key = (fs[0], fs[1])
                pairs[name][key] = pairs[name].get(key, MPoly.zero()) + coeff
    u_names: dict[tuple[str, str], str] = {}
    for name in s.unknowns:
        for key in pairs[name]:
            if key not in u_names:
                u_names[key] = names.fresh(f"U_{key[0]}_{key[1]}")

    def body(name: str) -> MPoly:
        """Q with A_name = t * Q."""
        out = linear[name]
        for key, c in pairs[name].items():
            out = out + c * MPoly.var(u_names[key])
        return out

    t = MPoly.var("t")
    eqs = [(name, t * body(name)) for name in s.unknowns]
    for (l, m), u in u_names.items():
        eqs.append((u, t * body(l) * body(m)))
    return PolySystem.of(eqs)


NORMAL_FORMS = ("quadratic", "leading_t")


def normalize_system(s: PolySystem, mode: str) -> PolySystem:
    """An equivalent proper system (same first component) in quadratic or B = tQ(t, B) form."""
    s.require_proper()
    if mode not in NORMAL_FORMS:
        raise ComputationError(f"unknown normal form {mode!r}")
    quad = s if s.is_quadratic else _quadratize(s)
    return quad if mode == "quadratic" else _leading_t(quad)


# ---------------------------------------------------------------------------
# Grammars
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Rule:
    head: str
    body: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.head} -> {' '.join(self.body)}"


@dataclass(frozen=True)
class Cfg:
    """Symbols (first is the start symbol), letters, and rules with nonempty bodies."""

    symbols: tuple[str, ...]
    alphabet: tuple[str, ...]
    rules: tuple[Rule, ...]

    def __post_init__(self) -> None:
        syms, letters = set(self.symbols), set(self.alphabet)
        if not self.symbols:
            raise ComputationError("a grammar needs a start symbol")
        if syms & letters:
            raise ComputationError(f"names used as both symbol and letter: {sorted(syms & letters)}")
        if "t" in syms:
            raise ComputationError("'t' cannot be a grammar symbol")
        seen: list[Rule] = []
        for rule in self.rules:
            if rule.head not in syms:
                raise ComputationError(f"rule head {rule.head!r} is not a symbol")
            if not rule.body:
                raise ComputationError(f"empty rule for {rule.head}")
            unknown = [x for x in rule.body if x not in syms and x not in letters]
            if unknown:
                raise ComputationError(f"rule {rule} uses undeclared names {unknown}")
            if rule not in seen:
                seen.append(rule)
        object.__setattr__(self, "rules", tuple(seen))

    @property
    def start(self) -> str:
        return self.symbols[0]

    def rules_for(self, symbol: str) -> list[Rule]:
        return [r for r in self.rules if r.head == symbol]

    def unit_rules(self) -> list[Rule]:
        return [r for r in self.rules if len(r.body) == 1 and r.body[0] in self.symbols]

    @property
    def is_proper(self) -> bool:
        return not self.unit_rules()

    def without_unit_rules(self) -> "Cfg":
        """Inline S -> S' rules; the language is unchanged."""
        rules = list(self.rules)
        for _ in range(len(self.symbols) + 1):
            units = [r for r in rules if len(r.body) == 1 and r.body[0] in self.symbols]
            if not units:
                return Cfg(self.symbols, self.alphabet, tuple(rules))
            unit = units[0]
            if unit.body[0] == unit.head:
                rules.remove(unit)
                continue
            rules.remove(unit)
            for r in [r for r in rules if r.head == unit.body[0]]:
                new = Rule(unit.head, r.body)
                if new not in rules:
                    rules.append(new)
        raise ImproperSystemError("unit rules form a cycle")

    def __str__(self) -> str:
        lines = [f"start {self.start}", "letters " + " ".join(self.alphabet)]
        for sym in self.symbols:
            bodies = [" ".join(r.body) for r in self.rules_for(sym)]
            if bodies:
                lines.append(f"{sym} -> " + " | ".join(bodies))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "start": self.start,
            "symbols": list(self.symbols),
            "letters": list(self.alphabet),
            "rules": [str(r) for r in self.rules],
        }


def grammar_to_system(g: Cfg) -> PolySystem:
    """Each rule contributes t^(letters) * prod(symbols); the system is positive."""
    if not g.is_proper:
        raise ImproperSystemError("grammar has unit rules: " + ", ".join(str(r) for r in g.unit_rules()))
    letters = set(g.alphabet)
    eqs = []
    for sym in g.symbols:
        p = MPoly.zero()
        for rule in g.rules_for(sym):
            exps: dict[str, int] = {}
            for x in rule.body:
                key = "t" if x in letters else x
                exps[key] = exps.get(key, 0) + 1
            p = p + MPoly({tuple(exps.items()): 1})
        eqs.append((sym, p))
    return PolySystem.of(eqs)


def brute_language_count(g: Cfg, n_max: int) -> TSeries:
    """Number of distinct words of each length, by dynamic programming over word sets."""
    if n_max > LANGUAGE_MAX_LENGTH:
        raise GuardExceededError(f"word enumeration is limited to length {LANGUAGE_MAX_LENGTH}")
    if not g.is_proper:
        raise ImproperSystemError("word counting needs a grammar without unit rules")
    letters = set(g.alphabet)
    words: dict[str, list[set[tuple[str, ...]]]] = {s: [set() for _ in range(n_max + 1)] for s in g.symbols}

    def expand(body: tuple[str, ...], length: int) -> set[tuple[str, ...]]:
        if not body:
            return {()} if length == 0 else set()
        head, rest = body[0], body[1:]
        out: set[tuple[str, ...]] = set()
        if head in letters:
            if length >= 1:
                out |= {(head,) + w for w in expand(rest, length - 1)}
            return out
        for k in range(1, length - len(rest) + 1):
            firsts = words[head][k]
            if not firsts:
                continue
            tails = expand(rest, length - k)
            out |= {f + w for f in firsts for w in tails}
        return out

    for length in range(1, n_max + 1):
        for sym in g.symbols:
            acc: set[tuple[str, ...]] = set()
            for rule in g.rules_for(sym):
                acc |= expand(rule.body, length)
            words[sym][length] = acc
    return TSeries(tuple(len(w) for w in words[g.start]), n_max)


# ---------------------------------------------------------------------------
# Lagrange inversion
# ---------------------------------------------------------------------------
def lagrange_coeff(phi: TSeries, psi: TSeries, n: int):
    """[t^n] Psi(U) for U = t Phi(U), as (1/n) [t^(n-1)] Psi'(t) Phi(t)^n."""
    if n < 1:
        raise ComputationError("Lagrange inversion needs n >= 1")
    if not phi[0]:
        raise ComputationError("Phi must have a nonzero constant term")
    if phi.order < n - 1 or psi.order < n:
        raise ComputationError(f"series must be known to order {n} (got {phi.order}, {psi.order})")
    body = psi.truncate(n).derive() * phi.truncate(n - 1) ** n
    return body[n - 1] / n
