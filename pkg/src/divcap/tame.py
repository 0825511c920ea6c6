"""Tame symbol of two rational functions and its composition with div.

For a height-one prime p the tame symbol of {alpha, beta} is the class in
the residue field k(p) of

    (-1)^(a b) * alpha^b / beta^a,   a = ord_p(alpha), b = ord_p(beta),

which is a p-unit. Here p ranges over coordinate hyperplanes (x_i), whose
residue field is the rational function field in the other variables, so
reduction mod p is substitution x_i = 0. Composing with div on each A/p
lands in cycles on height-two primes and must give zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import Cycle, MonomialSetting, Setting, csum, div_frac
from .errors import ContextError, PreconditionError, UnsupportedSetting, VerificationFailure
from .factored import FracElement, reduce_fraction
from .primes import HeightOnePrime, valuation


@dataclass(frozen=True)
class TameOutput:
    entries: tuple[tuple[HeightOnePrime, FracElement], ...]

    def residue(self, p: HeightOnePrime) -> FracElement | None:
        for q, r in self.entries:
            if q == p:
                return r
        return None

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "\n".join(f"{p}: {r}" for p, r in self.entries)


def _check_laurent(f: FracElement, label: str) -> None:
    for g, _ in f.factors:
        if g.as_variable() is None:
            raise UnsupportedSetting(
                f"{label} has the factor {g}; residues are computed only for Laurent monomials"
            )


def reduce_mod(p: HeightOnePrime, gamma: FracElement) -> FracElement:
    """Image of a p-unit in the residue field of a coordinate hyperplane p."""
    name = p.generator.as_variable()
    if name is None:
        raise UnsupportedSetting(f"{p} is not a coordinate hyperplane")
    if valuation(p, gamma):
        raise PreconditionError(f"{gamma} is not a unit along {p}")
    unit = gamma.unit
    factors = []
    for f, e in gamma.factors:
        r = f.subs({name: 0})
        if r.is_zero():
            raise UnsupportedSetting(f"factor {f} vanishes identically modulo {p}")
        if r.is_constant():
            unit *= r.constant_value() ** e
        else:
            factors.append((r, e))
    return FracElement(gamma.vars, unit, factors)


def tame(alpha: FracElement, beta: FracElement) -> TameOutput:
    if alpha.vars != beta.vars:
        raise ContextError("alpha and beta live in different contexts")
    _check_laurent(alpha, "alpha")
    _check_laurent(beta, "beta")
    gens = sorted({f for f, _ in alpha.factors} | {f for f, _ in beta.factors}, key=lambda f: f.sort_key())
    entries = []
    for g in gens:
        p = HeightOnePrime(g)
        a, b = valuation(p, alpha), valuation(p, beta)
        sign = -1 if (a * b) % 2 else 1
        gamma = reduce_fraction(alpha**b / beta**a * sign)
        entries.append((p, reduce_mod(p, gamma)))
    return TameOutput(tuple(entries))


def gersten_compose(alpha: FracElement, beta: FracElement, setting: Setting | None = None,
                    check: bool = True) -> Cycle:
    """sum_p div_{A/p}(tame residue at p), as a cycle on height-two primes of A.

    For a coordinate hyperplane p = (x_i) and a residue r free of x_i,
    div on A/p of r re-embeds as div(p, r) computed in A. With ``check``
    a nonzero result raises VerificationFailure.
    """
    setting = setting or MonomialSetting()
    vars = alpha.vars
    out = csum((div_frac(p, r, setting) for p, r in tame(alpha, beta)), vars, len(vars) - 2)
    if check and not out.is_zero():
        raise VerificationFailure(f"tame symbol followed by div is {out}, not 0")
    return out
