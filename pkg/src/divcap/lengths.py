"""Finite lengths that occur as cycle coefficients.

Three exactly computable back-ends:

* coordinate primes with monomial data: after inverting the variables
  outside q, the ideal is monomial and its colength is a staircase count;
* the affine plane: local intersection numbers of two curves at a
  rational point, by the recursive reduction algorithm;
* a univariate PID localised at (t): lengths of finitely presented
  modules from a diagonal (Smith) form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import count
from typing import Iterable, Sequence

from . import univariate as U
from .errors import ContextError, IrrationalPoints, PreconditionError, UnsupportedSetting
from .factored import FracElement
from .poly import Poly, Scalar
from .primes import HeightOnePrime, Prime
from .resultant import bivariate_gcd, determinant, resultant

INF = math.inf
Length = int | float  # a nonnegative integer or math.inf


# -- coordinate primes ---------------------------------------------------------


class CoordinatePrime(Prime):
    """The prime generated by a nonempty set of variables."""

    __slots__ = ()

    def __init__(self, vars: Sequence[str], names: Iterable[str]):
        vars = tuple(vars)
        names = set(names)
        if not names:
            raise PreconditionError("a coordinate prime needs at least one variable")
        unknown = names - set(vars)
        if unknown:
            raise ContextError(f"{sorted(unknown)} not in context {vars}")
        super().__init__(vars, (Poly.variable(vars, v) for v in names))

    @property
    def names(self) -> frozenset[str]:
        return frozenset(self.variable_names())

    def contains_poly(self, f: Poly) -> bool:
        return f.subs({v: 0 for v in self.names}).is_zero()


def coordinate_prime(vars: Sequence[str], names: Iterable[str]) -> Prime:
    """Coordinate prime, returned as a HeightOnePrime when it has one generator."""
    names = list(dict.fromkeys(names))
    if len(names) == 1:
        return HeightOnePrime.variable(vars, names[0])
    return CoordinatePrime(vars, names)


def local_exponents(names: frozenset[str], x: FracElement) -> tuple[int, ...] | None:
    """Exponent vector of ``x`` over the sorted ``names`` after localising at them.

    Factors that are variables outside ``names``, or that do not vanish
    when ``names`` are set to zero, are units. Returns None if some factor
    stays non-monomial.
    """
    order = sorted(names, key=x.vars.index)
    exps = dict.fromkeys(order, 0)
    for f, e in x.factors:
        v = f.as_variable()
        if v is not None:
            if v in exps:
                exps[v] += e
            continue
        if f.subs({w: 0 for w in order}).is_zero():
            return None
    return tuple(exps[v] for v in order)


def coord_local_length(q: Prime, gens: Sequence[FracElement]) -> Length:
    """Length of A_q / (gens) A_q for a coordinate prime q and monomial data."""
    names = q.variable_names()
    if names is None:
        raise UnsupportedSetting(f"{q} is not a coordinate prime")
    names = frozenset(names)
    vectors = []
    for g in gens:
        if g.vars != q.vars:
            raise ContextError(f"{g} and {q} live in different contexts")
        if not g.is_polynomial():
            raise PreconditionError(f"{g} is not a ring element")
        vec = local_exponents(names, g)
        if vec is None:
            raise UnsupportedSetting(f"{g} is not a monomial after localising at {q}")
        vectors.append(vec)
    return staircase_count(vectors, len(names))


def _minimalize(gens: Iterable[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
    gens = sorted(set(gens), key=sum)
    keep: list[tuple[int, ...]] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in keep):
            keep.append(g)
    return frozenset(keep)


def staircase_count(gens: Iterable[tuple[int, ...]], k: int) -> Length:
    """Number of monomials in k variables outside the monomial ideal (gens)."""
    return _staircase(_minimalize(gens), k)


@lru_cache(maxsize=65536)
def _staircase(gens: frozenset[tuple[int, ...]], k: int) -> Length:
    if any(not any(g) for g in gens):
        return 0
    if k == 0:
        return 1
    pure = [g[-1] for g in gens if not any(g[:-1])]
    if not pure:
        return INF
    d = min(pure)
    total = 0
    for j in range(d):
        # monomials with last exponent j: drop generators needing a higher last exponent
        sl = _minimalize(g[:-1] for g in gens if g[-1] <= j)
        c = _staircase(sl, k - 1)
        if c == INF:
            return INF
        total += c
    return total


# -- the plane -----------------------------------------------------------------


class PointPrime(Prime):
    """The maximal ideal (x - a, y - b) of Q[x, y]."""

    __slots__ = ()

    def __init__(self, vars: Sequence[str], a: Scalar, b: Scalar):
        vars = tuple(vars)
        if len(vars) != 2:
            raise ContextError("points live in a two-variable context")
        x, y = (Poly.variable(vars, v) for v in vars)
        super().__init__(vars, (x - Fraction(a), y - Fraction(b)))

    @property
    def coordinates(self) -> tuple[Fraction, Fraction]:
        return point_coordinates(self)

    def contains_poly(self, f: Poly) -> bool:
        a, b = self.coordinates
        return f.evaluate(dict(zip(self.vars, (a, b)))) == 0


def point_coordinates(p: Prime) -> tuple[Fraction, Fraction]:
    """Coordinates of a rational point given by generators x - a, y - b."""
    if len(p.vars) != 2 or p.height != 2:
        raise PreconditionError(f"{p} is not a point of the plane")
    out: list[Fraction | None] = [None, None]
    for g in p.gens:
        if g.degree() != 1 or len(g.support()) != 1:
            raise PreconditionError(f"{p} is not a rational point")
        (i,) = g.support()
        e = tuple(1 if j == i else 0 for j in range(2))
        c = g.terms[e]
        out[i] = -g.constant_term() / c
    return out[0], out[1]


def _translate(f: Poly, a: Fraction, b: Fraction) -> Poly:
    x, y = (Poly.variable(f.vars, v) for v in f.vars)
    return f.compose({f.vars[0]: x + a, f.vars[1]: y + b})


def plane_mult(P: Prime, F: Poly, G: Poly) -> Length:
    """Local intersection number of the curves F = 0 and G = 0 at the point P."""
    if F.vars != G.vars or F.vars != P.vars:
        raise ContextError("F, G and P must share a two-variable context")
    if F.is_zero() or G.is_zero():
        raise PreconditionError("plane_mult needs nonzero polynomials")
    a, b = point_coordinates(P)
    F, G = _translate(F, a, b), _translate(G, a, b)
    if F.constant_term() or G.constant_term():
        return 0
    g = bivariate_gcd(F, G)
    if not g.is_constant():
        if g.constant_term() == 0:
            return INF
        F, G = F.exact_div(g), G.exact_div(g)
    return _mult_at_origin(F, G)


@lru_cache(maxsize=65536)
def _mult_at_origin(F: Poly, G: Poly) -> int:
    # F and G have no common component through the origin
    if F.constant_term() or G.constant_term():
        return 0
    x, y = F.vars
    f0 = U.to_dense(F.subs({y: 0}), x)
    g0 = U.to_dense(G.subs({y: 0}), x)
    r, s = U.deg(f0), U.deg(g0)
    if r > s or (r == s and r < 0):
        F, G, f0, g0, r, s = G, F, g0, f0, s, r
    if r < 0:
        # y divides F: I(yH, G) = I(y, G) + I(H, G) = ord_x G(x, 0) + I(H, G)
        if s < 0:
            raise AssertionError("common component y through the origin")
        return U.order_at_zero(g0) + _mult_at_origin(F.divide_by_variable(y), G)
    X = Poly.variable(F.vars, x)
    G1 = f0[-1] * G - g0[-1] * X ** (s - r) * F
    s1 = U.deg(U.to_dense(G1.subs({y: 0}), x))
    assert s1 < s, "degree of G(x, 0) must drop in the reduction step"
    return _mult_at_origin(F, G1)


def _top_form_at(f: Poly, c: Fraction) -> Fraction:
    d = f.degree()
    return sum((coef * c ** e[0] for e, coef in f.terms.items() if sum(e) == d), Fraction(0))


def _shear(f: Poly, c: Fraction) -> Poly:
    x, y = (Poly.variable(f.vars, v) for v in f.vars)
    return f.compose({f.vars[0]: x + c * y})


def intersection_points(F: Poly, G: Poly) -> list[tuple[PointPrime, int]]:
    """All common zeros of F and G with their intersection numbers.

    Every common zero must be rational; otherwise IrrationalPoints is raised.
    Completeness is certified by comparing the sum of the local numbers with
    the degree of a resultant taken in generic (sheared) coordinates.
    """
    if F.vars != G.vars or len(F.vars) != 2:
        raise ContextError("intersection_points needs a two-variable context")
    if not bivariate_gcd(F, G).is_constant():
        raise PreconditionError(f"{F} and {G} share a component")
    if F.is_constant() or G.is_constant():
        return []
    x, y = F.vars
    for k in count():
        c = Fraction((k + 1) // 2 * (1 if k % 2 else -1))
        if _top_form_at(F, c) and _top_form_at(G, c):
            break
    Fs, Gs = _shear(F, c), _shear(G, c)
    R = U.to_dense(resultant(Fs, Gs, y), x)
    total = U.deg(R)
    found: list[tuple[PointPrime, int]] = []
    acc = 0
    for a in U.rational_roots(R):
        fa = U.to_dense(Fs.subs({x: a}), y)
        ga = U.to_dense(Gs.subs({x: a}), y)
        for b in U.rational_roots(U.gcd_(fa, ga)):
            P = PointPrime(F.vars, a + c * b, b)
            k = plane_mult(P, F, G)
            found.append((P, k))
            acc += k
    if acc != total:
        raise IrrationalPoints(
            f"{F} and {G} meet in {total - acc} point(s) (with multiplicity) not defined over Q"
        )
    found.sort(key=lambda t: t[0].sort_key())
    return found


# -- univariate PID --------------------------------------------------------------


class PIDMatrix:
    """A matrix over Q[t], read over the localisation at (t).

    With ``nrows`` rows it presents M = coker(A^ncols -> A^nrows); an empty
    matrix with one row presents A itself.
    """

    __slots__ = ("var", "nrows", "ncols", "rows")

    def __init__(self, rows: Sequence[Sequence[Poly | Scalar]], var: str = "t", nrows: int | None = None):
        self.var = var
        ctx = (var,)
        norm = []
        for r in rows:
            line = []
            for e in r:
                if isinstance(e, Poly):
                    if e.vars != ctx:
                        raise ContextError(f"entry {e} is not a polynomial in {var} alone")
                    line.append(e)
                else:
                    line.append(Poly.constant(ctx, e))
            norm.append(tuple(line))
        self.rows = tuple(norm)
        self.nrows = len(norm) if nrows is None else nrows
        if nrows is not None and norm and len(norm) != nrows:
            raise ValueError("nrows disagrees with the given rows")
        widths = {len(r) for r in norm}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.ncols = widths.pop() if widths else 0

    @classmethod
    def diagonal(cls, entries: Sequence[Poly | Scalar], var: str = "t") -> "PIDMatrix":
        n = len(entries)
        zero = Poly.zero((var,))
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)], var)

    @classmethod
    def free(cls, rank: int, var: str = "t") -> "PIDMatrix":
        """Empty presentation of A^rank."""
        return cls([[] for _ in range(rank)], var, nrows=rank)

    def dense(self) -> list[list[U.Dense]]:
        return [[U.to_dense(e, self.var) for e in r] for r in self.rows]

    def augmented(self, x: Poly) -> "PIDMatrix":
        """Presentation [m | x I] of M / xM."""
        zero = Poly.zero((self.var,))
        return PIDMatrix(
            [list(r) + [x if i == j else zero for j in range(self.nrows)] for i, r in enumerate(self.rows)]
            if self.rows else [[x if i == j else zero for j in range(self.nrows)] for i in range(self.nrows)],
            self.var,
        )

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in r) for r in self.rows) + "]"

    def __repr__(self) -> str:
        return f"PIDMatrix({self})"


def smith_diagonal(m: PIDMatrix) -> list[U.Dense]:
    """Nonzero diagonal entries of a diagonal form of ``m`` over Q[t].

    Row and column operations with Euclidean division; the number of
    entries returned is the rank of the matrix.
    """
    a = m.dense()
    nr, nc = m.nrows, m.ncols
    diag: list[U.Dense] = []
    k = 0
    while k < min(nr, nc):
        # pivot: nonzero entry of least degree in the remaining block
        best = None
        for i in range(k, nr):
            for j in range(k, nc):
                if a[i][j] and (best is None or U.deg(a[i][j]) < U.deg(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[k], a[i] = a[i], a[k]
        for row in a:
            row[k], row[j] = row[j], row[k]
        dirty = False
        piv = a[k][k]
        for i in range(k + 1, nr):
            if a[i][k]:
                q, r = U.divmod_(a[i][k], piv)
                for j in range(k, nc):
                    a[i][j] = U.sub(a[i][j], U.mul(q, a[k][j]))
                dirty = dirty or bool(r)
        for j in range(k + 1, nc):
            if a[k][j]:
                q, r = U.divmod_(a[k][j], piv)
                for i in range(k, nr):
                    a[i][j] = U.sub(a[i][j], U.mul(q, a[i][k]))
                dirty = dirty or bool(r)
        if dirty:
            continue  # a smaller remainder now sits in row or column k
        diag.append(piv)
        k += 1
    return diag


def pid_coker_length(m: PIDMatrix) -> Length:
    """Length of coker(m) over Q[t] localised at (t); infinite if not torsion."""
    diag = smith_diagonal(m)
    if len(diag) < m.nrows:
        return INF
    return sum(U.order_at_zero(d) for d in diag)


def ord_t(f: Poly, var: str = "t") -> Length:
    return U.order_at_zero(U.to_dense(f, var))


@dataclass(frozen=True)
class ChiReport:
    quotient_length: Length  # l(M / xM)
    kernel_length: Length  # l(_x M)
    rank: int
    x_length: Length  # l(A / xA)

    @property
    def chi(self) -> Length:
        return self.quotient_length - self.kernel_length

    @property
    def ok(self) -> bool:
        return self.chi == self.x_length * self.rank


def check_chi(m: PIDMatrix, x: Poly) -> ChiReport:
    """Euler characteristic of multiplication by x on M against l(A/xA) * rank M."""
    if x.is_zero():
        raise PreconditionError("x must be nonzero")
    diag = smith_diagonal(m)
    rank = m.nrows - len(diag)
    ox = ord_t(x, m.var)
    quotient = pid_coker_length(m.augmented(x))
    # M = A^rank + sum A/(d): x kills min(ord d, ord x) on each torsion summand
    kernel = sum(min(U.order_at_zero(d), ox) for d in diag)
    return ChiReport(quotient, kernel, rank, ox)


@dataclass(frozen=True)
class DetLengthReport:
    coker_length: Length
    ord_a: Length
    ord_b: Length

    @property
    def ok(self) -> bool:
        return self.coker_length == self.ord_a - self.ord_b


def check_det_length(phi: PIDMatrix, a: Poly, b: Poly) -> DetLengthReport:
    """Length of coker(phi) against ord(a) - ord(b) where a/b = det(phi)."""
    if phi.nrows != phi.ncols:
        raise PreconditionError("phi must be square")
    if a.is_zero() or b.is_zero():
        raise PreconditionError("a and b must be nonzero")
    det = determinant([list(r) for r in phi.rows], (phi.var,)) if phi.nrows else Poly.constant((phi.var,), 1)
    if det.is_zero():
        raise PreconditionError("phi has zero determinant")
    if a != det * b:
        raise PreconditionError(f"a/b is not the determinant {det}")
    return DetLengthReport(pid_coker_length(phi), ord_t(a, phi.var), ord_t(b, phi.var))
