"""Cycles, the div(p, x) construction and intersection with a principal divisor.

A cycle is a finite integer combination of primes of one fixed dimension
(its grade). ``div(p, x)`` sums the lengths of A_q/(p, x)A_q over the primes
q one dimension below p; ``cap(u, alpha)`` applies div(-, u) to every
component of alpha not containing u.

Lengths come from one of two settings: the monomial setting (all relevant
primes are generated by variables) or the plane setting (two variables,
points as height-two primes). ``AutoSetting`` tries the monomial back-end
first and falls back to the plane when the context has two variables.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ContextError, ParseError, PreconditionError, UnsupportedSetting
from .factored import FactoredElement, FracElement
from .lengths import (
    INF,
    Length,
    PointPrime,
    coord_local_length,
    coordinate_prime,
    intersection_points,
    point_coordinates,
)
from .parse import parse_poly
from .poly import Poly
from .primes import HeightOnePrime, Prime


class UnitPrime(Prime):
    """The zero ideal; its basis element is [A] itself."""

    __slots__ = ()

    def __init__(self, vars: Sequence[str]):
        super().__init__(vars, ())

    def contains_poly(self, f: Poly) -> bool:
        return f.is_zero()

    def __str__(self) -> str:
        return "(0)"


def _prime_str(p: Prime) -> str:
    return "[A]" if isinstance(p, UnitPrime) or p.height == 0 else f"[A/{p}]"


class Cycle:
    """Finite integer combination of primes, all of dimension ``grade``."""

    __slots__ = ("vars", "grade", "coeffs")

    def __init__(self, vars: Sequence[str], grade: int, coeffs: Mapping[Prime, int] | None = None):
        self.vars = tuple(vars)
        self.grade = grade
        clean: dict[Prime, int] = {}
        for p, k in (coeffs or {}).items():
            if p.vars != self.vars:
                raise ContextError(f"{p} lives in {p.vars}, expected {self.vars}")
            if p.dim != grade:
                raise PreconditionError(f"{p} has dimension {p.dim}, cycle grade is {grade}")
            if k:
                clean[p] = clean.get(p, 0) + k
                if not clean[p]:
                    del clean[p]
        self.coeffs = clean

    @classmethod
    def _raw(cls, vars, grade, coeffs) -> "Cycle":
        obj = object.__new__(cls)
        obj.vars, obj.grade, obj.coeffs = vars, grade, coeffs
        return obj

    @classmethod
    def zero(cls, vars: Sequence[str], grade: int) -> "Cycle":
        return cls._raw(tuple(vars), grade, {})

    @classmethod
    def single(cls, p: Prime, k: int = 1) -> "Cycle":
        return cls(p.vars, p.dim, {p: k})

    @classmethod
    def fundamental(cls, vars: Sequence[str]) -> "Cycle":
        """[A]."""
        return cls.single(UnitPrime(vars))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, p: Prime) -> int:
        return self.coeffs.get(p, 0)

    def items(self) -> list[tuple[Prime, int]]:
        return sorted(self.coeffs.items(), key=lambda t: t[0].sort_key())

    def primes(self) -> list[Prime]:
        return [p for p, _ in self.items()]

    def _merge_grade(self, other: "Cycle") -> int:
        if self.vars != other.vars:
            raise ContextError(f"cycles live in {self.vars} and {other.vars}")
        if self.grade != other.grade and self.coeffs and other.coeffs:
            raise PreconditionError(f"grade mismatch: {self.grade} vs {other.grade}")
        return self.grade if self.coeffs or not other.coeffs else other.grade

    def __add__(self, other: "Cycle") -> "Cycle":
        grade = self._merge_grade(other)
        out = dict(self.coeffs)
        for p, k in other.coeffs.items():
            s = out.get(p, 0) + k
            if s:
                out[p] = s
            else:
                del out[p]
        return Cycle._raw(self.vars, grade, out)

    def __neg__(self) -> "Cycle":
        return Cycle._raw(self.vars, self.grade, {p: -k for p, k in self.coeffs.items()})

    def __sub__(self, other: "Cycle") -> "Cycle":
        return self + (-other)

    def scale(self, k: int) -> "Cycle":
        if not k:
            return Cycle.zero(self.vars, self.grade)
        return Cycle._raw(self.vars, self.grade, {p: k * c for p, c in self.coeffs.items()})

    def __mul__(self, k: int) -> "Cycle":
        return self.scale(k)

    __rmul__ = __mul__

    def restrict(self, keep: Callable[[Prime], bool]) -> "Cycle":
        return Cycle._raw(self.vars, self.grade, {p: k for p, k in self.coeffs.items() if keep(p)})

    def localize(self, m: Prime) -> "Cycle":
        """Components whose prime lies inside m (every generator of p is in m)."""
        return self.restrict(lambda p: all(m.contains_poly(g) for g in p.gens))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        if self.vars != other.vars or self.coeffs != other.coeffs:
            return False
        return self.grade == other.grade or not self.coeffs

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        return format_cycle(self)

    def __repr__(self) -> str:
        return f"Cycle({self}, grade={self.grade})"


def cycle_arith(a: Cycle, b: Cycle, op: str) -> Cycle:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown operation {op!r}")


def csum(cycles: Iterable[Cycle], vars: Sequence[str], grade: int) -> Cycle:
    out = Cycle.zero(vars, grade)
    for c in cycles:
        out = out + c
    return out


def format_cycle(c: Cycle) -> str:
    items = c.items()
    if not items:
        return "0"
    parts = []
    for i, (p, k) in enumerate(items):
        term = f"{abs(k)}*{_prime_str(p)}"
        if i == 0:
            parts.append(term if k > 0 else f"-{term}")
        else:
            parts.append((" + " if k > 0 else " - ") + term)
    return "".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?\[A(?:/\(([^()\[\]]*)\))?\]\s*")


def prime_from_gens(vars: Sequence[str], gens: Sequence[Poly]) -> Prime:
    vars = tuple(vars)
    if not gens:
        return UnitPrime(vars)
    if len(gens) == 1:
        return HeightOnePrime(gens[0])
    names = [g.as_variable() for g in gens]
    if None not in names:
        return coordinate_prime(vars, names)
    if len(vars) == 2 and len(gens) == 2:
        p = Prime(vars, gens)
        a, b = point_coordinates(p)
        return PointPrime(vars, a, b)
    raise UnsupportedSetting(f"cannot represent the prime generated by {', '.join(map(str, gens))}")


def parse_cycle(text: str, vars: Sequence[str], grade: int | None = None) -> Cycle:
    """Inverse of format_cycle; ``grade`` is needed only for the zero cycle."""
    vars = tuple(vars)
    s = text.strip()
    if s == "0":
        if grade is None:
            raise ParseError("the zero cycle needs an explicit grade", text, 0)
        return Cycle.zero(vars, grade)
    pos = 0
    coeffs: dict[Prime, int] = {}
    first = True
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        if not m or (not first and m.group(1) is None):
            raise ParseError("expected a term like 2*[A/(x,y)]", text, pos)
        sign = -1 if m.group(1) == "-" else 1
        k = int(m.group(2)) if m.group(2) else 1
        inner = m.group(3)
        gens = [parse_poly(g, vars) for g in inner.split(",")] if inner is not None else []
        try:
            p = prime_from_gens(vars, gens)
        except ValueError as exc:
            raise ParseError(str(exc), text, m.start(3) if inner is not None else pos) from None
        coeffs[p] = coeffs.get(p, 0) + sign * k
        pos = m.end()
        first = False
    dims = {p.dim for p in coeffs}
    if len(dims) > 1:
        raise ParseError("components of different dimensions", text, 0)
    g = dims.pop() if dims else grade
    return Cycle(vars, g, coeffs)


# -- settings --------------------------------------------------------------------

LengthHook = Callable[[Prime, tuple, Length], None]


def _as_element(x: FracElement | Poly) -> FracElement:
    if isinstance(x, Poly):
        from .factored import from_poly

        return from_poly(x)
    return x


class MonomialSetting:
    """Lengths at coordinate primes; non-variable factors must be units along p.

    ``on_length`` (if given) is called as ``on_length(q, gens, value)`` for
    every length computed, which lets callers cross-check each coefficient.
    """

    name = "monomial"

    def __init__(self, on_length: LengthHook | None = None):
        self.on_length = on_length
        self._cache: dict[tuple, Length] = {}

    def length(self, q: Prime, gens: tuple[FracElement, ...]) -> Length:
        key = (q, gens)
        if key in self._cache:
            return self._cache[key]
        value = coord_local_length(q, gens)
        self._cache[key] = value
        if self.on_length is not None:
            self.on_length(q, gens, value)
        return value

    def div(self, p: Prime, x: FactoredElement) -> Cycle:
        vars = p.vars
        if p.height == 0:
            return _div_principal(x)
        names = p.variable_names()
        if names is None:
            raise UnsupportedSetting(f"{p} is not generated by variables")
        S = frozenset(names)
        if p.dim == 0:
            if p.contains(x):
                raise PreconditionError(f"{x} lies in {p}")
            return Cycle.zero(vars, -1)
        candidates = []
        for f, e in x.factors:
            v = f.as_variable()
            if v is not None:
                if v in S:
                    raise PreconditionError(f"{x} lies in {p}")
                candidates.append(v)
                continue
            red = f.subs({w: 0 for w in S})
            if red.is_zero():
                raise PreconditionError(f"{x} lies in {p}")
            if not red.is_constant():
                raise UnsupportedSetting(f"factor {f} of {x} is not a unit along {p}")
        gens = tuple(FracElement.variable(vars, w) for w in sorted(S, key=vars.index)) + (x,)
        out: dict[Prime, int] = {}
        for v in candidates:
            q = coordinate_prime(vars, S | {v})
            k = self.length(q, gens)
            if k == INF:
                raise AssertionError(f"infinite length at {q}")
            if k:
                out[q] = k
        return Cycle(vars, p.dim - 1, out)


class PlaneSetting:
    """Two variables: curves meet in rational points with intersection numbers."""

    name = "plane"

    def __init__(self):
        self._cache: dict[tuple[Poly, Poly], list] = {}

    def points(self, f: Poly, g: Poly) -> list[tuple[PointPrime, int]]:
        key = (f, g)
        if key not in self._cache:
            self._cache[key] = intersection_points(f, g)
        return self._cache[key]

    def div(self, p: Prime, x: FactoredElement) -> Cycle:
        vars = p.vars
        if len(vars) != 2:
            raise UnsupportedSetting("the plane setting needs exactly two variables")
        if p.height == 0:
            return _div_principal(x)
        if p.contains(x):
            raise PreconditionError(f"{x} lies in {p}")
        if p.dim == 0:
            return Cycle.zero(vars, -1)
        f = p.gens[0]
        out: dict[Prime, int] = {}
        for g, e in x.factors:
            for P, k in self.points(f, g):
                out[P] = out.get(P, 0) + e * k
        return Cycle(vars, 0, out)


class AutoSetting:
    """Monomial back-end where it applies, the plane back-end otherwise."""

    name = "auto"

    def __init__(self, on_length: LengthHook | None = None):
        self.monomial = MonomialSetting(on_length)
        self.plane = PlaneSetting()

    def div(self, p: Prime, x: FactoredElement) -> Cycle:
        try:
            return self.monomial.div(p, x)
        except UnsupportedSetting:
            if len(p.vars) != 2:
                raise
        return self.plane.div(p, x)


Setting = MonomialSetting | PlaneSetting | AutoSetting


def make_setting(name: str | None, on_length: LengthHook | None = None) -> Setting:
    if name in (None, "auto"):
        return AutoSetting(on_length)
    if name == "monomial":
        return MonomialSetting(on_length)
    if name == "plane":
        return PlaneSetting()
    raise ValueError(f"unknown setting {name!r}")


def _div_principal(x: FracElement) -> Cycle:
    """div of an element on A itself: its irreducible factors with exponents."""
    vars = x.vars
    return Cycle(vars, len(vars) - 1, {HeightOnePrime(f): e for f, e in x.factors})


def div_cycle(p: Prime, x: FactoredElement | Poly, setting: Setting | None = None) -> Cycle:
    """sum over q one dimension below p of l(A_q/(p, x)A_q) [A/q]."""
    x = _as_element(x)
    if x.vars != p.vars:
        raise ContextError(f"{x} and {p} live in different contexts")
    if not x.is_polynomial():
        raise PreconditionError(f"{x} is not a ring element; use div_frac")
    if p.contains(x):
        raise PreconditionError(f"{x} lies in {p}")
    return (setting or AutoSetting()).div(p, x.as_factored())


def div_frac(p: Prime, f: FracElement, setting: Setting | None = None) -> Cycle:
    """div(p, num) - div(p, den) for a rational function num/den."""
    setting = setting or AutoSetting()
    return div_cycle(p, f.numerator(), setting) - div_cycle(p, f.denominator(), setting)


def cap(u: FactoredElement | Poly, alpha: Cycle, setting: Setting | None = None) -> Cycle:
    """(u) cap alpha: components containing u die, the others map to div(p, u)."""
    u = _as_element(u)
    if u.vars != alpha.vars:
        raise ContextError("u and the cycle live in different contexts")
    setting = setting or AutoSetting()
    out = Cycle.zero(alpha.vars, alpha.grade - 1)
    for p, k in alpha.items():
        if p.contains(u):
            continue
        out = out + div_cycle(p, u, setting).scale(k)
    return out


def cap_chain(elements: Sequence[FactoredElement], alpha: Cycle, setting: Setting | None = None) -> Cycle:
    """(e_1) cap (e_2) cap ... cap alpha, innermost (last) element applied first."""
    setting = setting or AutoSetting()
    for e in reversed(elements):
        alpha = cap(e, alpha, setting)
    return alpha
