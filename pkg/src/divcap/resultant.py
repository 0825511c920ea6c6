"""Resultants and bivariate gcds by pseudo-remainder sequences."""

from __future__ import annotations

from . import univariate as U
from .errors import ContextError
from .poly import Poly


def prem(a: Poly, b: Poly, var: str) -> Poly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b."""
    db = b.degree_in(var)
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    da = a.degree_in(var)
    if da < db:
        return a
    x = Poly.variable(a.vars, var)
    lb = b.lc_in(var)
    r = a
    steps = 0
    while not r.is_zero() and r.degree_in(var) >= db:
        dr = r.degree_in(var)
        r = lb * r - r.lc_in(var) * x ** (dr - db) * b
        steps += 1
    return r * lb ** (da - db + 1 - steps)


def _raw_resultant(a: Poly, b: Poly, var: str) -> Poly:
    # subresultant algorithm, contents left in place
    da, db = a.degree_in(var), b.degree_in(var)
    s = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da % 2 and db % 2:
            s = -1
    g = Poly.constant(a.vars, 1)
    h = Poly.constant(a.vars, 1)
    while db > 0:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = prem(a, b, var)
        a = b
        if r.is_zero():
            return Poly.zero(a.vars)
        b = r.exact_div(g * h**delta)
        g = a.lc_in(var)
        if delta:
            h = (g**delta).exact_div(h ** (delta - 1))
        da, db = a.degree_in(var), b.degree_in(var)
    # db == 0: b is a nonzero polynomial free of var
    if da == 0:
        return Poly.constant(a.vars, s)
    h = (b**da).exact_div(h ** (da - 1))
    return h * s


def resultant(f: Poly, g: Poly, var: str, normalize: bool = True) -> Poly:
    """Resultant of ``f`` and ``g`` eliminating ``var``.

    With ``normalize`` (the default) the sign is fixed so that the leading
    coefficient is positive. If one input is free of ``var`` and the other
    has degree ``n`` in it, the result is that input to the power ``n``.
    """
    if f.vars != g.vars:
        raise ContextError("variable contexts differ")
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if f.degree_in(var) == 0 and g.degree_in(var) == 0:
        raise ValueError(f"both inputs are constant in {var}")
    res = _raw_resultant(f, g, var)
    if normalize and not res.is_zero() and res.lc < 0:
        res = -res
    return res


def _content_in(f: Poly, var: str, other: str) -> U.Dense:
    """gcd over Q[other] of the coefficients of f viewed in Q[other][var]."""
    out: U.Dense = []
    for c in f.coeffs_in(var).values():
        out = U.gcd_(out, U.to_dense(c, other))
    return out


def bivariate_gcd(f: Poly, g: Poly) -> Poly:
    """Monic-normalised (primitive, positive lc) gcd of two polynomials in two variables."""
    if f.vars != g.vars or len(f.vars) != 2:
        raise ContextError("bivariate_gcd needs a two-variable context")
    x, y = f.vars
    if f.is_zero():
        return g.primitive()[1] if not g.is_zero() else g
    if g.is_zero():
        return f.primitive()[1]
    cf, cg = _content_in(f, y, x), _content_in(g, y, x)
    c = U.from_dense(U.gcd_(cf, cg), f.vars, x)
    a = f.exact_div(U.from_dense(cf, f.vars, x))
    b = g.exact_div(U.from_dense(cg, f.vars, x))
    if a.degree_in(y) < b.degree_in(y):
        a, b = b, a
    while not b.is_zero() and b.degree_in(y) > 0:
        r = prem(a, b, y)
        a = b
        if r.is_zero():
            b = r
        else:
            b = r.exact_div(U.from_dense(_content_in(r, y, x), f.vars, x))
    common = a if b.is_zero() else Poly.constant(f.vars, 1)
    return (c * common).primitive()[1]


def sylvester_resultant(f: Poly, g: Poly, var: str) -> Poly:
    """Classical Sylvester determinant (no sign normalisation); slow, for cross-checks."""
    m, n = f.degree_in(var), g.degree_in(var)
    fc, gc = f.coeffs_in(var), g.coeffs_in(var)
    zero = Poly.zero(f.vars)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([fc.get(m - (j - i), zero) if 0 <= j - i <= m else zero for j in range(size)])
    for i in range(m):
        rows.append([gc.get(n - (j - i), zero) if 0 <= j - i <= n else zero for j in range(size)])
    return _det(rows, f.vars)


def _det(rows: list[list[Poly]], vars) -> Poly:
    # Bareiss fraction-free elimination
    n = len(rows)
    if n == 0:
        return Poly.constant(vars, 1)
    m = [list(r) for r in rows]
    sign = 1
    prev = Poly.constant(vars, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(vars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def determinant(rows: list[list[Poly]], vars) -> Poly:
    return _det(rows, vars)

