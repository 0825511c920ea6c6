"""Independent, deliberately naive reference computations used by the tests.

Nothing here calls the library's algorithms: lengths are counted by
enumerating monomials in a box, determinants by the Leibniz formula, and
intersection numbers read off from the order of a Sylvester resultant.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from divcap.poly import Poly

INF = math.inf


# -- monomial lengths ----------------------------------------------------------------


def box_staircase(gens, k: int):
    """#monomials in k variables outside the ideal generated by monomials ``gens``.

    Finite iff every variable has a pure power among the generators; then
    every standard monomial lies in the box bounded by those powers.
    """
    gens = [tuple(g) for g in gens]
    if k == 0:
        return 0 if gens else 1
    bounds = []
    for i in range(k):
        pure = [g[i] for g in gens if g[i] > 0 and all(g[j] == 0 for j in range(k) if j != i)]
        if any(not any(g) for g in gens):
            return 0
        if not pure:
            return INF
        bounds.append(min(pure))
    count = 0
    for e in itertools.product(*(range(b) for b in bounds)):
        if not any(all(a <= b for a, b in zip(g, e)) for g in gens):
            count += 1
    return count


def local_monomial_exponents(names, element):
    """Exponents of the variables ``names`` in a factored element (other factors are units)."""
    out = []
    for n in names:
        e = 0
        for f, k in element.factors:
            if f.as_variable() == n:
                e += k
        out.append(e)
    return out


class StaircaseOracle:
    """``on_length`` hook checking every monomial length against the box count."""

    def __init__(self):
        self.checked = 0
        self.mismatches = []

    def __call__(self, q, gens, value):
        names = q.variable_names()
        vectors = [local_monomial_exponents(names, g) for g in gens]
        expected = box_staircase(vectors, len(names))
        self.checked += 1
        if expected != value:
            self.mismatches.append((q, gens, value, expected))


# -- determinants and PID lengths --------------------------------------------------


def _sign(perm) -> int:
    s = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def leibniz_det(rows, vars) -> Poly:
    n = len(rows)
    total = Poly.zero(vars)
    for perm in itertools.permutations(range(n)):
        term = Poly.constant(vars, _sign(perm))
        for i, j in enumerate(perm):
            term = term * rows[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def ord_at(f: Poly, var: str, a: Fraction = Fraction(0)):
    """Order of vanishing of a univariate polynomial at a."""
    if f.is_zero():
        return INF
    t = Poly.variable(f.vars, var)
    g = f.compose({var: t + a}) if a else f
    i = f.vars.index(var)
    return min(e[i] for e in g.terms)


def pid_length_by_minors(rows, nrows: int, var: str = "t"):
    """l(coker) over Q[t]_(t) as min ord_t of the maximal minors (inf if all vanish)."""
    ncols = len(rows[0]) if rows else 0
    if nrows == 0:
        return 0
    if ncols < nrows:
        return INF
    best = INF
    for cols in itertools.combinations(range(ncols), nrows):
        minor = leibniz_det([[rows[i][j] for j in cols] for i in range(nrows)], (var,))
        best = min(best, ord_at(minor, var))
        if best == 0:
            break
    return best


# -- plane intersection numbers ----------------------------------------------------


def sylvester(f: Poly, g: Poly, var: str) -> Poly:
    m, n = f.degree_in(var), g.degree_in(var)
    fc, gc = f.coeffs_in(var), g.coeffs_in(var)
    zero = Poly.zero(f.vars)
    size = m + n
    rows = [[fc.get(m - (j - i), zero) if 0 <= j - i <= m else zero for j in range(size)] for i in range(n)]
    rows += [[gc.get(n - (j - i), zero) if 0 <= j - i <= n else zero for j in range(size)] for i in range(m)]
    return leibniz_det(rows, f.vars)


def _top_nonzero(f: Poly, c: Fraction) -> bool:
    d = f.degree()
    return sum((coef * c ** e[0] for e, coef in f.terms.items() if sum(e) == d), Fraction(0)) != 0


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _ugcd(f: list, g: list) -> list:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        while len(f) >= len(g):
            c = f[-1] / g[-1]
            shift = len(f) - len(g)
            for i, gi in enumerate(g):
                f[i + shift] -= c * gi
            f = _trim(f)
        f, g = g, f
    return f


def _distinct_roots(f: list) -> int:
    """Number of distinct complex roots of a nonzero univariate polynomial."""
    df = [i * c for i, c in enumerate(f)][1:]
    return (len(f) - 1) - (len(_ugcd(f, df)) - 1)


def _dense_in(f: Poly, var: str) -> list:
    i = f.vars.index(var)
    out = [Fraction(0)] * (max((e[i] for e in f.terms), default=-1) + 1)
    for e, c in f.terms.items():
        out[e[i]] += c
    return out


def resultant_order_mult(F: Poly, G: Poly, a: Fraction, b: Fraction):
    """I_(a,b)(F, G) as the order at the point's x-coordinate of Res_y in sheared coordinates.

    Returns None when the oracle does not apply: another common zero (over
    the algebraic closure) of the sheared curves lies on the same vertical line.
    """
    x, y = F.vars
    X, Y = Poly.gens(F.vars)
    for c in (Fraction(k) for k in (0, 1, -1, 2, -2, 3, -3, 5, 7)):
        if not (_top_nonzero(F, c) and _top_nonzero(G, c)):
            continue
        Fs, Gs = F.compose({x: X + c * Y}), G.compose({x: X + c * Y})
        xa = a - c * b
        common = _ugcd(_dense_in(Fs.subs({x: xa}), y), _dense_in(Gs.subs({x: xa}), y))
        if not common:
            continue
        if len(common) == 1:
            return 0  # no common zero on the line at all
        if _distinct_roots(common) != 1:
            continue
        return ord_at(sylvester(Fs, Gs, y), x, xa)
    return None
