"""Seeded random inputs for the property suites and the ``fuzz`` command.

Every generator takes a :class:`random.Random` so that a seed fully
determines the sequence of instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .factored import FactoredElement, FracElement
from .lengths import PIDMatrix
from .poly import Poly
from .primes import alpha_sequence, support_partition

POOL = ("x", "y", "z", "w", "s", "r")


def context(rng: random.Random, lo: int = 2, hi: int = 6) -> tuple[str, ...]:
    return POOL[: rng.randint(lo, hi)]


def monomial(vars: Sequence[str], exps: dict[str, int], unit=1) -> FactoredElement:
    vars = tuple(vars)
    return FactoredElement(vars, unit, [(Poly.variable(vars, v), e) for v, e in exps.items() if e])


@dataclass(frozen=True)
class Pair:
    vars: tuple[str, ...]
    u: FactoredElement
    v: FactoredElement


def monomial_pair(rng: random.Random, max_vars: int = 6, max_exp: int = 5, max_common: int = 4,
                  min_common: int = 0) -> Pair:
    """u, v monomials; each variable divides both, only u, only v, or neither."""
    vars = context(rng, max(2, min_common), max_vars)
    names = list(vars)
    rng.shuffle(names)
    r = rng.randint(min_common, min(max_common, len(names)))
    common, rest = names[:r], names[r:]
    eu, ev = {}, {}
    for x in common:
        eu[x], ev[x] = rng.randint(1, max_exp), rng.randint(1, max_exp)
    for x in rest:
        side = rng.randrange(4)
        if side == 0:
            eu[x] = rng.randint(1, max_exp)
        elif side == 1:
            ev[x] = rng.randint(1, max_exp)
    return Pair(vars, monomial(vars, eu), monomial(vars, ev))


def coprime_pair(rng: random.Random, max_vars: int = 6, max_exp: int = 5) -> Pair:
    vars = context(rng, 2, max_vars)
    names = list(vars)
    rng.shuffle(names)
    k = rng.randint(1, len(names) - 1)
    eu = {x: rng.randint(1, max_exp) for x in names[:k] if rng.random() < 0.8}
    ev = {x: rng.randint(1, max_exp) for x in names[k:] if rng.random() < 0.8}
    return Pair(vars, monomial(vars, eu), monomial(vars, ev))


def lemma51_pair(rng: random.Random, max_vars: int = 6, max_exp: int = 5) -> Pair:
    """At least two common primes whose ratios n_i/m_i are not all equal."""
    while True:
        p = monomial_pair(rng, max_vars, max_exp, max_common=4, min_common=2)
        part = support_partition(p.u, p.v)
        if part.r >= 2 and alpha_sequence(part).G < part.r:
            return p


def equal_orders_pair(rng: random.Random, max_vars: int = 6, max_exp: int = 4) -> Pair:
    p = monomial_pair(rng, max_vars, max_exp, min_common=1)
    part = support_partition(p.u, p.v)
    ev = p.v.variable_exponents()
    for q, n, _ in part.both:
        ev[q.generator.as_variable()] = n
    return Pair(p.vars, p.u, monomial(p.vars, ev))


def laurent(rng: random.Random, vars: Sequence[str], max_exp: int = 3) -> FracElement:
    unit = Fraction(rng.choice([1, -1, 2, -3, 5]), rng.choice([1, 1, 2, 7]))
    return FracElement(
        vars, unit,
        [(Poly.variable(vars, v), rng.randint(-max_exp, max_exp)) for v in vars if rng.random() < 0.7],
    )


def laurent_pair(rng: random.Random, max_vars: int = 5) -> tuple[FracElement, FracElement]:
    vars = context(rng, 2, max_vars)
    return laurent(rng, vars), laurent(rng, vars)


# -- plane curves through the origin -------------------------------------------------

PLANE = ("x", "y")


def _small(rng: random.Random, zero: bool = True) -> int:
    while True:
        k = rng.randint(-3, 3)
        if k or zero:
            return k


def _line(rng: random.Random) -> Poly:
    x, y = Poly.gens(PLANE)
    while True:
        a, b = _small(rng), _small(rng)
        if a or b:
            return (a * x + b * y).primitive()[1]


def _conic(rng: random.Random, family: str) -> Poly:
    x, y = Poly.gens(PLANE)
    if family == "parabola":  # y = a x^2 + b x
        return (y - _small(rng, False) * x**2 - _small(rng) * x).primitive()[1]
    if family == "xparabola":  # x = a y^2 + b y
        return (x - _small(rng, False) * y**2 - _small(rng) * y).primitive()[1]
    while True:  # circle x^2 + y^2 + a x + b y through the origin
        a, b = _small(rng), _small(rng)
        if a or b:
            return (x**2 + y**2 + a * x + b * y).primitive()[1]


def plane_pair(rng: random.Random, max_factors: int = 3) -> Pair:
    """Products of lines and conics through the origin.

    Conics are drawn from a single family per instance (parabolas y = ax^2+bx,
    parabolas x = ay^2+by, or circles through the origin); within a family,
    and against lines through the origin, all intersections are rational.
    """
    family = rng.choice(["parabola", "xparabola", "circle"])
    pool: list[Poly] = []
    while len(pool) < 5:
        f = _line(rng) if rng.random() < 0.5 else _conic(rng, family)
        if f not in pool:
            pool.append(f)
    common = rng.sample(pool, rng.randint(0, 2))
    rest = [f for f in pool if f not in common]
    fu = {f: rng.randint(1, 2) for f in common}
    fv = {f: rng.randint(1, 2) for f in common}
    for f in rest:
        side = rng.randrange(3)
        if side == 0 and len(fu) < max_factors + 1:
            fu[f] = rng.randint(1, 2)
        elif side == 1 and len(fv) < max_factors + 1:
            fv[f] = rng.randint(1, 2)
    u = FactoredElement(PLANE, 1, list(fu.items()))
    v = FactoredElement(PLANE, 1, list(fv.items()))
    return Pair(PLANE, u, v)


# -- matrices over Q[t] ----------------------------------------------------------------


def _t_poly(rng: random.Random, max_deg: int, var: str = "t") -> Poly:
    """Random polynomial of degree <= max_deg, biased towards zeros and t-divisibility."""
    ctx = (var,)
    if rng.random() < 0.25:
        return Poly.zero(ctx)
    low = rng.choice([0, 0, 1, 1, 2, 3])
    terms = {}
    for k in range(min(low, max_deg), max_deg + 1):
        if k == low or rng.random() < 0.4:
            c = rng.randint(-4, 4)
            if c:
                terms[(k,)] = c
    if not terms:
        terms[(min(low, max_deg),)] = 1
    return Poly(ctx, terms)


def pid_matrix(rng: random.Random, max_size: int = 4, max_deg: int = 4, square: bool = False) -> PIDMatrix:
    nrows = rng.randint(1, max_size)
    ncols = nrows if square else rng.randint(0, max_size)
    if ncols == 0:
        return PIDMatrix.free(nrows)
    return PIDMatrix([[_t_poly(rng, max_deg) for _ in range(ncols)] for _ in range(nrows)])


def nonzero_t_poly(rng: random.Random, max_deg: int) -> Poly:
    while True:
        f = _t_poly(rng, max_deg)
        if not f.is_zero():
            return f
