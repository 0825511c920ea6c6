"""Prime ideals, discrete valuations and rational-equivalence witnesses.

In a polynomial ring every height-one prime is principal, generated by an
irreducible polynomial, and the valuation it defines on the fraction field
is simply the exponent of that generator in a factored representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContextError, PreconditionError
from .factored import FactoredElement, FracElement, reduce_fraction
from .poly import Poly


class Prime:
    """A prime ideal given by generators; equality is by (context, generators).

    Subclasses only add constructors and names, so the same ideal reached
    through different routes (e.g. the coordinate prime ``(x,y)`` and the
    rational point at the origin) compares equal.
    """

    __slots__ = ("vars", "gens", "_hash")

    def __init__(self, vars: Sequence[str], gens: Iterable[Poly]):
        self.vars = tuple(vars)
        gens = tuple(gens)
        for g in gens:
            if g.vars != self.vars:
                raise ContextError(f"generator {g} lives in {g.vars}, expected {self.vars}")
        self.gens = tuple(sorted(gens, key=Poly.sort_key))
        self._hash = None

    @property
    def height(self) -> int:
        return len(self.gens)

    @property
    def dim(self) -> int:
        """Krull dimension of A/p (assumes the generators form a regular sequence)."""
        return len(self.vars) - self.height

    def variable_names(self) -> tuple[str, ...] | None:
        names = tuple(g.as_variable() for g in self.gens)
        return None if None in names else names

    def contains_poly(self, f: Poly) -> bool:
        raise NotImplementedError

    def contains(self, x: FracElement) -> bool:
        """Whether a ring element (given by irreducible factors) lies in this prime."""
        return any(self.contains_poly(f) for f, e in x.factors if e > 0)

    def sort_key(self) -> tuple:
        return (self.height, tuple(g.sort_key() for g in self.gens))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Prime):
            return NotImplemented
        return self.vars == other.vars and self.gens == other.gens

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, self.gens))
        return self._hash

    def __lt__(self, other: "Prime") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "(" + ",".join(str(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self}"


class HeightOnePrime(Prime):
    """A principal prime (f) with f irreducible, primitive and nonconstant."""

    __slots__ = ()

    def __init__(self, generator: Poly):
        if generator.is_zero() or generator.is_constant():
            raise PreconditionError(f"{generator} does not generate a height-one prime")
        super().__init__(generator.vars, (generator.primitive()[1],))

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "HeightOnePrime":
        return cls(Poly.variable(vars, name))

    @property
    def generator(self) -> Poly:
        return self.gens[0]

    def contains_poly(self, f: Poly) -> bool:
        g = self.generator
        if f == g:
            return True
        v = g.as_variable()
        if v is not None:
            return f.subs({v: 0}).is_zero()
        try:
            f.exact_div(g)
        except ValueError:
            return False
        return True


def valuation(p: HeightOnePrime, f: FracElement) -> int:
    """Order of ``f`` along ``p``: the exponent of p's generator in f's factored form."""
    if not isinstance(f, FracElement):
        raise TypeError("valuation expects a factored element or rational function")
    if f.vars != p.vars:
        raise ContextError(f"{f} and {p} live in different contexts")
    return f.exponent(p.generator)


@dataclass(frozen=True)
class SupportPartition:
    """Primes dividing u and/or v with their orders.

    ``both`` holds (p, n, m) with n = ord_p(u) and m = ord_p(v); ``only_u``
    holds (p, s) and ``only_v`` holds (p, t).
    """

    both: tuple[tuple[HeightOnePrime, int, int], ...]
    only_u: tuple[tuple[HeightOnePrime, int], ...]
    only_v: tuple[tuple[HeightOnePrime, int], ...]

    @property
    def r(self) -> int:
        return len(self.both)

    def equal_orders(self) -> bool:
        return all(n == m for _, n, m in self.both)


def support_partition(u: FracElement, v: FracElement) -> SupportPartition:
    if u.vars != v.vars:
        raise ContextError("u and v live in different contexts")
    if not (u.is_polynomial() and v.is_polynomial()):
        raise PreconditionError("u and v must be ring elements")
    ou = {f: e for f, e in u.factors}
    ov = {f: e for f, e in v.factors}
    both, only_u, only_v = [], [], []
    for f in sorted(set(ou) | set(ov), key=Poly.sort_key):
        p = HeightOnePrime(f)
        if f in ou and f in ov:
            both.append((p, ou[f], ov[f]))
        elif f in ou:
            only_u.append((p, ou[f]))
        else:
            only_v.append((p, ov[f]))
    return SupportPartition(tuple(both), tuple(only_u), tuple(only_v))


@dataclass(frozen=True)
class WitnessEntry:
    """a/b = v^n / u^m with a, b outside p (n = ord_p u, m = ord_p v)."""

    prime: HeightOnePrime
    a: FactoredElement
    b: FactoredElement
    n: int
    m: int

    @property
    def ratio(self) -> FracElement:
        return self.a / self.b


@dataclass(frozen=True)
class Witness:
    entries: tuple[WitnessEntry, ...] = field(default_factory=tuple)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def is_empty(self) -> bool:
        return not self.entries


def _split(f: FracElement) -> tuple[FactoredElement, FactoredElement]:
    return f.numerator(), f.denominator()


def check_witness_entry(e: WitnessEntry, u: FracElement, v: FracElement) -> None:
    """Raise PreconditionError unless the entry satisfies the witness invariants."""
    if valuation(e.prime, e.a) or valuation(e.prime, e.b):
        raise PreconditionError(f"witness pair at {e.prime} is not a {e.prime}-unit pair")
    if reduce_fraction(e.a / e.b) != reduce_fraction(v**e.n / u**e.m):
        raise PreconditionError(f"witness at {e.prime}: a/b differs from v^{e.n}/u^{e.m}")


def make_witness(u: FactoredElement, v: FactoredElement) -> Witness:
    """One pair per common prime: a_i/b_i is v^n_i / u^m_i in lowest terms."""
    part = support_partition(u, v)
    entries = []
    for p, n, m in part.both:
        a, b = _split(reduce_fraction(v**n / u**m))
        entry = WitnessEntry(p, a, b, n, m)
        if valuation(p, a) or valuation(p, b):
            raise AssertionError("reduced witness pair meets its prime")
        entries.append(entry)
    return Witness(tuple(entries))


def perturb_witness(w: Witness, extra: Sequence[tuple[Poly, int]]) -> Witness:
    """Multiply every a_i and b_i by the same product of J^lambda.

    The ratio a_i/b_i is unchanged, but a_i and b_i now share the primes J,
    mimicking the auxiliary primes of a non-factorial domain.
    """
    entries = []
    for e in w.entries:
        vars = e.a.vars
        c = FactoredElement(vars, 1, extra)
        for p, _ in c.factors:
            if p == e.prime.generator:
                raise PreconditionError(f"perturbation factor {p} is the witness prime itself")
        entries.append(WitnessEntry(e.prime, e.a * c, e.b * c, e.n, e.m))
    return Witness(tuple(entries))


@dataclass(frozen=True)
class AlphaData:
    """Common primes ordered by decreasing n/m, with alpha_j = n_1 m_j - m_1 n_j."""

    order: tuple[tuple[HeightOnePrime, int, int], ...]
    alphas: tuple[int, ...]
    G: int


def alpha_sequence(part: SupportPartition) -> AlphaData:
    if not part.both:
        raise PreconditionError("alpha sequence needs at least one common prime")
    # stable sort keeps canonical prime order inside ties
    order = tuple(sorted(part.both, key=lambda t: -Fraction(t[1], t[2])))
    _, n1, m1 = order[0]
    alphas = tuple(n1 * m - m1 * n for _, n, m in order)
    G = sum(1 for a in alphas if a == 0)
    assert all(a == 0 for a in alphas[:G]) and all(a > 0 for a in alphas[G:])
    return AlphaData(order, alphas, G)
