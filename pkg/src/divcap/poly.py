"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a mapping from exponent tuples (one slot per variable of
its context) to nonzero :class:`fractions.Fraction` coefficients. Terms are
ordered graded-lexicographically with the first context variable largest.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence, Union

from .errors import ContextError

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]


def grlex_key(e: Exponents) -> tuple[int, Exponents]:
    return (sum(e), e)


class Poly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponents, Scalar] | None = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: dict[Exponents, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e} for context {self.vars}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Exponents, Fraction]) -> "Poly":
        obj = object.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Poly":
        return cls._raw(tuple(vars), {})

    @classmethod
    def constant(cls, vars: Sequence[str], c: Scalar) -> "Poly":
        vars = tuple(vars)
        c = Fraction(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "Poly":
        vars = tuple(vars)
        if name not in vars:
            raise ContextError(f"{name!r} is not a variable of {vars}")
        e = tuple(int(v == name) for v in vars)
        return cls._raw(vars, {e: Fraction(1)})

    @classmethod
    def monomial(cls, vars: Sequence[str], exps: Exponents, c: Scalar = 1) -> "Poly":
        return cls(vars, {tuple(exps): c})

    @classmethod
    def gens(cls, vars: Sequence[str]) -> tuple["Poly", ...]:
        return tuple(cls.variable(vars, v) for v in vars)

    # -- coercion -------------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ContextError(f"variable contexts differ: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.vars, other)
        return NotImplemented

    # -- ring operations ------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero(self.vars)
            return Poly._raw(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._raw(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Poly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * len(self.vars): Fraction(other)}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def index(self, var: str | int) -> int:
        if isinstance(var, int):
            return var
        try:
            return self.vars.index(var)
        except ValueError:
            raise ContextError(f"{var!r} is not a variable of {self.vars}") from None

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: str | int) -> int:
        i = self.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def leading(self) -> tuple[Exponents, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    @property
    def lc(self) -> Fraction:
        return self.leading()[1]

    def support(self) -> set[int]:
        """Indices of the variables that actually occur."""
        used: set[int] = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return used

    def as_variable(self) -> str | None:
        """The variable name if this polynomial is exactly one variable."""
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        if c != 1 or sum(e) != 1:
            return None
        return self.vars[e.index(1)]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sort_key(self) -> tuple:
        return tuple(
            (-sum(e), tuple(-k for k in e), c)
            for e, c in sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)
        )

    # -- structure ------------------------------------------------------------

    def coeffs_in(self, var: str | int) -> dict[int, "Poly"]:
        """Split as a polynomial in ``var``; coefficients keep the full context."""
        i = self.index(var)
        parts: dict[int, dict[Exponents, Fraction]] = {}
        for e, c in self.terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Poly._raw(self.vars, t) for k, t in parts.items()}

    @classmethod
    def from_coeffs_in(cls, vars: Sequence[str], var: str, coeffs: Mapping[int, "Poly"]) -> "Poly":
        vars = tuple(vars)
        x = cls.variable(vars, var)
        out = cls.zero(vars)
        for k, c in coeffs.items():
            out = out + c * x**k
        return out

    def lc_in(self, var: str | int) -> "Poly":
        d = self.degree_in(var)
        if d < 0:
            return Poly.zero(self.vars)
        return self.coeffs_in(var)[d]

    def subs(self, values: Mapping[str, Scalar]) -> "Poly":
        """Substitute rational constants for some variables (context kept)."""
        idx = {self.index(k): Fraction(v) for k, v in values.items()}
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, val in idx.items():
                if e[i]:
                    c = c * val ** e[i]
                    e2[i] = 0
            if c:
                t = tuple(e2)
                s = out.get(t, 0) + c
                if s:
                    out[t] = s
                else:
                    del out[t]
        return Poly._raw(self.vars, out)

    def compose(self, images: Mapping[str, "Poly"]) -> "Poly":
        """Substitute polynomials (in the same context) for variables."""
        gens = [images[v] if v in images else Poly.variable(self.vars, v) for v in self.vars]
        out = Poly.zero(self.vars)
        for e, c in self.terms.items():
            term = Poly.constant(self.vars, c)
            for g, k in zip(gens, e):
                if k:
                    term = term * g**k
            out = out + term
        return out

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        if set(point) != set(self.vars):
            raise ContextError("evaluation point must assign every variable")
        return self.subs(point).constant_value()

    def divide_by_variable(self, var: str | int, k: int = 1) -> "Poly":
        i = self.index(var)
        if any(e[i] < k for e in self.terms):
            raise ValueError(f"{self} is not divisible by {self.vars[i]}^{k}")
        return Poly._raw(
            self.vars, {e[:i] + (e[i] - k,) + e[i + 1:]: c for e, c in self.terms.items()}
        )

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient of an exact division; raises if ``other`` does not divide."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading()
        rem = self
        quot: dict[Exponents, Fraction] = {}
        while rem.terms:
            e, c = rem.leading()
            if any(a < b for a, b in zip(e, le)):
                raise ValueError(f"{other} does not divide {self}")
            qe = tuple(a - b for a, b in zip(e, le))
            qc = c / lc
            quot[qe] = quot.get(qe, 0) + qc
            rem = rem - Poly._raw(self.vars, {qe: qc}) * other
        return Poly._raw(self.vars, {e: c for e, c in quot.items() if c})

    def primitive(self) -> tuple[Fraction, "Poly"]:
        """Split into (content, primitive part).

        The primitive part has coprime integer coefficients and a positive
        leading coefficient; ``content * primitive == self``.
        """
        if not self.terms:
            raise ValueError("zero polynomial has no primitive part")
        den = lcm(*(c.denominator for c in self.terms.values()))
        nums = [int(c * den) for c in self.terms.values()]
        g = 0
        for k in nums:
            g = gcd(g, k)
        content = Fraction(g, den)
        if self.lc < 0:
            content = -content
        if content == 1:
            return content, self
        return content, Poly._raw(self.vars, {e: c / content for e, c in self.terms.items()})

    def with_vars(self, vars: Sequence[str]) -> "Poly":
        """Re-embed into a larger (or reordered) context containing every used variable."""
        vars = tuple(vars)
        pos = {v: i for i, v in enumerate(vars)}
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            e2 = [0] * len(vars)
            for i, k in enumerate(e):
                if k:
                    if self.vars[i] not in pos:
                        raise ContextError(f"{self.vars[i]!r} missing from {vars}")
                    e2[pos[self.vars[i]]] = k
            out[tuple(e2)] = c
        return Poly._raw(vars, out)

    # -- printing -------------------------------------------------------------

    def _juxtapose(self) -> bool:
        return all(len(v) == 1 for v in self.vars)

    def _mono_str(self, e: Exponents) -> str:
        parts = []
        for v, k in zip(self.vars, e):
            if k == 1:
                parts.append(v)
            elif k:
                parts.append(f"{v}^{k}")
        return ("" if self._juxtapose() else "*").join(parts)

    def _term_str(self, e: Exponents, c: Fraction) -> str:
        if not any(e):
            return str(c)
        mono = self._mono_str(e)
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        if c.denominator == 1 and self._juxtapose():
            return f"{c}{mono}"
        return f"{c}*{mono}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)
        out = self._term_str(*items[0])
        for e, c in items[1:]:
            if c < 0:
                out += " - " + self._term_str(e, -c)
            else:
                out += " + " + self._term_str(e, c)
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r}, vars={self.vars})"


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """Named entry point for ``a op b`` with op in {add, sub, mul}."""
    if a.vars != b.vars:
        raise ContextError(f"variable contexts differ: {a.vars} vs {b.vars}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def product(items: Iterable[Poly], vars: Sequence[str]) -> Poly:
    out = Poly.constant(vars, 1)
    for p in items:
        out = out * p
    return out
