"""Dense univariate arithmetic over the rationals.

Coefficient lists are stored lowest degree first and kept trimmed, so the
zero polynomial is ``[]``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .poly import Poly

Dense = list[Fraction]


def trim(a: Sequence) -> Dense:
    a = [Fraction(c) for c in a]
    while a and not a[-1]:
        a.pop()
    return a


def deg(a: Dense) -> int:
    return len(a) - 1


def add(a: Dense, b: Dense) -> Dense:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a: Dense, b: Dense) -> Dense:
    return add(a, [-c for c in b])


def mul(a: Dense, b: Dense) -> Dense:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def scale(a: Dense, c) -> Dense:
    return trim([x * c for x in a])


def shift(a: Dense, k: int) -> Dense:
    """Multiply by t^k."""
    return [Fraction(0)] * k + list(a) if a else []


def divmod_(a: Dense, b: Dense) -> tuple[Dense, Dense]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lb
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = trim(a)
    return trim(q), a


def monic(a: Dense) -> Dense:
    return [c / a[-1] for c in a] if a else []


def gcd_(a: Dense, b: Dense) -> Dense:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def derivative(a: Dense) -> Dense:
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a: Dense, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def order_at_zero(a: Dense) -> int | float:
    """t-adic order; infinite for the zero polynomial."""
    if not a:
        return float("inf")
    for i, c in enumerate(a):
        if c:
            return i
    raise AssertionError("unreachable")


def order_at(a: Dense, root) -> int | float:
    """Multiplicity of ``root`` as a zero of ``a``."""
    if not a:
        return float("inf")
    k = 0
    lin = [Fraction(-root), Fraction(1)]
    while True:
        q, r = divmod_(a, lin)
        if r:
            return k
        a, k = q, k + 1


def squarefree_part(a: Dense) -> Dense:
    if deg(a) < 1:
        return monic(a)
    g = gcd_(a, derivative(a))
    return monic(divmod_(a, g)[0])


def _divisors(n: int) -> list[int]:
    n = abs(n)
    primes: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            primes[d] = primes.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        primes[n] = primes.get(n, 0) + 1
    divs = [1]
    for p, e in primes.items():
        divs = [x * p**k for x in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots(a: Dense) -> list[Fraction]:
    """Distinct rational roots, in increasing order (rational root test)."""
    a = trim(a)
    if not a:
        raise ValueError("the zero polynomial vanishes everywhere")
    roots: list[Fraction] = []
    k = order_at_zero(a)
    if k:
        roots.append(Fraction(0))
        a = a[k:]
    a = squarefree_part(a)
    if deg(a) < 1:
        return roots
    den = lcm(*(c.denominator for c in a))
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            if gcd(p, q) != 1:
                continue
            for s in (p, -p):
                if _int_eval(ints, s, q) == 0:
                    roots.append(Fraction(s, q))
    return sorted(set(roots))


def _int_eval(ints: list[int], p: int, q: int) -> int:
    n = len(ints) - 1
    return sum(c * p**i * q ** (n - i) for i, c in enumerate(ints))


def to_dense(poly: Poly, var: str | int) -> Dense:
    """Coefficients of a polynomial that involves only ``var``."""
    i = poly.index(var)
    out: dict[int, Fraction] = {}
    for e, c in poly.terms.items():
        if any(k for j, k in enumerate(e) if j != i):
            raise ValueError(f"{poly} involves variables other than {poly.vars[i]}")
        out[e[i]] = c
    return trim([out.get(k, 0) for k in range(max(out, default=-1) + 1)])


def from_dense(a: Sequence, vars: Sequence[str], var: str) -> Poly:
    vars = tuple(vars)
    i = vars.index(var)
    n = len(vars)
    return Poly(vars, {tuple(k if j == i else 0 for j in range(n)): c for k, c in enumerate(a) if c})
