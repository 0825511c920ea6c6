"""Ring elements and rational functions kept as unit times a product of irreducibles.

Factors are primitive polynomials (coprime integer coefficients, positive
leading coefficient), so associated factors are literally equal and merge.
Single variables and degree-one factors are irreducible by inspection;
higher-degree factors are taken on the caller's word, as the package does
no multivariate factorisation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContextError, PreconditionError
from .poly import Poly, Scalar, product

Pair = tuple[Poly, int]


def _merge(pairs: Iterable[Pair]) -> tuple[Pair, ...]:
    # pairs already primitive
    acc: dict[Poly, int] = {}
    for p, e in pairs:
        acc[p] = acc.get(p, 0) + e
    return tuple(sorted(((p, e) for p, e in acc.items() if e), key=lambda t: t[0].sort_key()))


class FracElement:
    """A nonzero element of the fraction field: ``unit * prod(f**e)``, exponents nonzero."""

    __slots__ = ("vars", "unit", "factors", "_hash")

    def __init__(self, vars: Sequence[str], unit: Scalar = 1, factors: Iterable[tuple[Poly, int]] = ()):
        vars = tuple(vars)
        unit = Fraction(unit)
        if not unit:
            raise ZeroDivisionError("elements must be nonzero")
        norm: list[Pair] = []
        for p, e in factors:
            if p.vars != vars:
                raise ContextError(f"factor {p} lives in {p.vars}, expected {vars}")
            if p.is_zero():
                raise ZeroDivisionError("zero factor")
            if not isinstance(e, int):
                raise TypeError("exponents must be integers")
            content, prim = p.primitive()
            unit *= content**e
            if prim.is_constant():
                continue
            norm.append((prim, e))
        self._set(vars, unit, _merge(norm))
        self._check_sign()

    def _set(self, vars, unit, factors) -> None:
        self.vars = vars
        self.unit = unit
        self.factors = factors
        self._hash = None

    def _check_sign(self) -> None:
        pass

    @classmethod
    def _trusted(cls, vars, unit, factors) -> "FracElement":
        klass = FactoredElement if all(e > 0 for _, e in factors) else FracElement
        obj = object.__new__(klass)
        obj._set(vars, Fraction(unit), factors)
        return obj

    @classmethod
    def unreduced(cls, vars: Sequence[str], unit: Scalar, factors: Iterable[Pair]) -> "FracElement":
        """Raw container with repeated or cancelling factors left as given."""
        obj = object.__new__(FracElement)
        obj._set(tuple(vars), Fraction(unit), tuple(factors))
        return obj

    @classmethod
    def one(cls, vars: Sequence[str]) -> "FactoredElement":
        return cls._trusted(tuple(vars), 1, ())

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "FactoredElement":
        return cls._trusted(tuple(vars), 1, ((Poly.variable(vars, name), 1),))

    @classmethod
    def monomial(cls, vars: Sequence[str], exps: Sequence[int], unit: Scalar = 1) -> "FracElement":
        vars = tuple(vars)
        return cls._trusted(
            vars, unit,
            _merge((Poly.variable(vars, v), k) for v, k in zip(vars, exps) if k),
        )

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "FracElement") -> None:
        if self.vars != other.vars:
            raise ContextError(f"variable contexts differ: {self.vars} vs {other.vars}")

    def __mul__(self, other) -> "FracElement":
        if isinstance(other, (int, Fraction)):
            return FracElement._trusted(self.vars, self.unit * other, self.factors)
        self._check(other)
        return FracElement._trusted(
            self.vars, self.unit * other.unit, _merge(self.factors + other.factors)
        )

    __rmul__ = __mul__

    def inverse(self) -> "FracElement":
        return FracElement._trusted(self.vars, 1 / self.unit, tuple((p, -e) for p, e in self.factors))

    def __truediv__(self, other) -> "FracElement":
        if isinstance(other, (int, Fraction)):
            return FracElement._trusted(self.vars, self.unit / other, self.factors)
        return self * other.inverse()

    def __pow__(self, k: int) -> "FracElement":
        if not k:
            return FracElement.one(self.vars)
        return FracElement._trusted(self.vars, self.unit**k, tuple((p, e * k) for p, e in self.factors))

    def __neg__(self) -> "FracElement":
        return FracElement._trusted(self.vars, -self.unit, self.factors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FracElement):
            return NotImplemented
        return (self.vars, self.unit, self.factors) == (other.vars, other.unit, other.factors)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, self.unit, self.factors))
        return self._hash

    # -- structure ------------------------------------------------------------

    def exponent(self, p: Poly) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def is_unit(self) -> bool:
        return not self.factors

    def is_monomial(self) -> bool:
        """Every factor is a single variable."""
        return all(p.as_variable() for p, _ in self.factors)

    def variable_exponents(self) -> dict[str, int]:
        out = {}
        for p, e in self.factors:
            v = p.as_variable()
            if v is None:
                raise PreconditionError(f"{p} is not a variable")
            out[v] = e
        return out

    def numerator(self) -> "FactoredElement":
        return FracElement._trusted(self.vars, self.unit, tuple((p, e) for p, e in self.factors if e > 0))

    def denominator(self) -> "FactoredElement":
        return FracElement._trusted(self.vars, 1, tuple((p, -e) for p, e in self.factors if e < 0))

    def is_polynomial(self) -> bool:
        return all(e > 0 for _, e in self.factors)

    def as_factored(self) -> "FactoredElement":
        if not self.is_polynomial():
            raise PreconditionError(f"{self} has negative exponents")
        return FracElement._trusted(self.vars, self.unit, self.factors)

    def expand_numerator(self) -> Poly:
        return self.unit * product((p**e for p, e in self.factors if e > 0), self.vars)

    def expand_denominator(self) -> Poly:
        return product((p**-e for p, e in self.factors if e < 0), self.vars)

    def expand(self) -> Poly:
        if not self.is_polynomial():
            raise PreconditionError(f"{self} is not a polynomial")
        return self.expand_numerator()

    def with_vars(self, vars: Sequence[str]) -> "FracElement":
        vars = tuple(vars)
        return FracElement._trusted(
            vars, self.unit, _merge((p.with_vars(vars), e) for p, e in self.factors)
        )

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        num = self.expand_numerator()
        den = self.expand_denominator()
        if den == 1:
            return str(num)
        n = str(num)
        if len(num.terms) > 1:
            n = f"({n})"
        d = str(den)
        if len(den.terms) > 1 or not _is_atom(den):
            d = f"({d})"
        return f"{n}/{d}"

    def factored_str(self) -> str:
        """``unit * (poly)^e * ...`` form."""
        parts = [str(self.unit)] if self.unit != 1 or not self.factors else []
        for p, e in self.factors:
            parts.append(f"({p})" if e == 1 else f"({p})^{e}")
        return " * ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.factored_str()!r})"


def _is_atom(p: Poly) -> bool:
    """A single power of a single variable with coefficient 1."""
    if len(p.terms) != 1:
        return False
    (e, c), = p.terms.items()
    return c == 1 and sum(1 for k in e if k) == 1


class FactoredElement(FracElement):
    """A nonzero ring element ``unit * prod(f**e)`` with positive exponents."""

    __slots__ = ()

    def _check_sign(self) -> None:
        if any(e <= 0 for _, e in self.factors):
            raise PreconditionError("ring elements need positive exponents")


def expand(e: FracElement) -> Poly:
    """unit * prod(factor**exponent) as a polynomial."""
    return e.expand()


def reduce_fraction(f: FracElement) -> FracElement:
    """Canonical form: primitive factors, associates merged, zero exponents dropped.

    In a UFD this realises the element with prescribed valuations: after
    cancellation the numerator and denominator share no prime.
    """
    tmp = FracElement(f.vars, f.unit, f.factors)
    return FracElement._trusted(tmp.vars, tmp.unit, tmp.factors)


def from_poly(p: Poly) -> FactoredElement:
    """Lightweight factorisation: content, variable powers, and one leftover factor.

    The leftover primitive polynomial (if any) becomes a single factor and is
    treated as irreducible.
    """
    if p.is_zero():
        raise ZeroDivisionError("zero has no factored form")
    n = len(p.vars)
    low = [min(e[i] for e in p.terms) for i in range(n)]
    pairs: list[Pair] = [(Poly.variable(p.vars, v), k) for v, k in zip(p.vars, low) if k]
    rest = p
    for i, k in enumerate(low):
        if k:
            rest = rest.divide_by_variable(i, k)
    if not rest.is_constant():
        pairs.append((rest, 1))
        rest = Poly.constant(p.vars, 1)
    return FactoredElement(p.vars, rest.constant_value(), pairs)
