"""The commutator (u) cap (v) cap [A] - (v) cap (u) cap [A] and its witnesses.

Every verification here is an exact equality of cycles computed from both
sides independently. Reports never raise on a failed identity; they carry
``ok`` and the CLI turns a failure into a nonzero exit status. Violated
hypotheses (wrong number of common primes, unequal orders, ...) raise
PreconditionError instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .cycles import AutoSetting, Cycle, Setting, cap, cap_chain, csum, div_cycle, div_frac
from .errors import PreconditionError, VerificationFailure
from .factored import FactoredElement, reduce_fraction
from .lengths import CoordinatePrime, coord_local_length
from .poly import Poly
from .primes import (
    AlphaData,
    HeightOnePrime,
    Prime,
    Witness,
    WitnessEntry,
    alpha_sequence,
    make_witness,
    support_partition,
)


@dataclass
class Check:
    label: str
    lhs: object
    rhs: object

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class IdentityReport:
    """A named list of exact checks."""

    name: str
    checks: list[Check] = field(default_factory=list)
    data: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, label: str, lhs, rhs) -> Check:
        c = Check(label, lhs, rhs)
        self.checks.append(c)
        return c

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def require(self) -> "IdentityReport":
        if not self.ok:
            bad = "; ".join(f"{c.label}: {c.lhs} != {c.rhs}" for c in self.failures())
            raise VerificationFailure(f"{self.name} failed: {bad}")
        return self


@dataclass
class CommutatorReport:
    u: FactoredElement
    v: FactoredElement
    uv: Cycle  # (u) cap (v) cap [A]
    vu: Cycle  # (v) cap (u) cap [A]
    lhs: Cycle
    rhs: Cycle
    witness: Witness
    breakdown: list[tuple[HeightOnePrime, Cycle]]

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    ok = equal

    def require(self) -> "CommutatorReport":
        if not self.equal:
            raise VerificationFailure(f"formula fails for u={self.u}, v={self.v}: {self.lhs} != {self.rhs}")
        return self


def _setting(setting: Setting | None) -> Setting:
    return setting or AutoSetting()


def commutator(u: FactoredElement, v: FactoredElement, setting: Setting | None = None) -> Cycle:
    """(u) cap (v) cap [A] - (v) cap (u) cap [A]."""
    setting = _setting(setting)
    A = Cycle.fundamental(u.vars)
    return cap(u, cap(v, A, setting), setting) - cap(v, cap(u, A, setting), setting)


def verify_formula6(u: FactoredElement, v: FactoredElement, setting: Setting | None = None,
                    witness: Witness | None = None) -> CommutatorReport:
    """Commutator against sum_i div(p_i, a_i/b_i) for a witness (default: reduced fractions)."""
    setting = _setting(setting)
    A = Cycle.fundamental(u.vars)
    uv = cap(u, cap(v, A, setting), setting)
    vu = cap(v, cap(u, A, setting), setting)
    lhs = uv - vu
    w = make_witness(u, v) if witness is None else witness
    # div(p, a) - div(p, b) separately: a and b may share factors (perturbed witnesses)
    breakdown = [(e.prime, div_cycle(e.prime, e.a, setting) - div_cycle(e.prime, e.b, setting)) for e in w]
    rhs = csum((c for _, c in breakdown), u.vars, len(u.vars) - 2)
    return CommutatorReport(u, v, uv, vu, lhs, rhs, w, breakdown)


def height_two_coordinate_primes(vars: Sequence[str]) -> list[CoordinatePrime]:
    return [CoordinatePrime(vars, pair) for pair in combinations(vars, 2)]


def _elt(p: HeightOnePrime) -> FactoredElement:
    return FactoredElement(p.vars, 1, ((p.generator, 1),))


def verify_boxed(u: FactoredElement, v: FactoredElement, m: Prime,
                 setting: Setting | None = None) -> IdentityReport:
    """The coefficient identity at one height-two prime m (lengths localised at m):

    sum_l t_l l(A/(q_l, u)) - sum_k s_k l(A/(q'_k, v)) = coefficient of [A/m]
    in sum_i div(p_i, a_i/b_i).
    """
    if m.height != 2 or m.variable_names() is None:
        raise PreconditionError(f"{m} is not a height-two coordinate prime")
    setting = _setting(setting)
    part = support_partition(u, v)
    left = sum(t * coord_local_length(m, (_elt(q), u)) for q, t in part.only_v) - sum(
        s * coord_local_length(m, (_elt(q), v)) for q, s in part.only_u
    )
    report = verify_formula6(u, v, setting)
    rep = IdentityReport(f"boxed identity at {m}")
    rep.add("lengths vs witness coefficient", left, report.rhs.coefficient(m))
    rep.add("lengths vs commutator coefficient", left, report.lhs.coefficient(m))
    return rep


def verify_equal_orders(u: FactoredElement, v: FactoredElement,
                        setting: Setting | None = None) -> IdentityReport:
    """n_i = m_i for all common primes: one pair a/b = v/u serves every prime."""
    part = support_partition(u, v)
    if not part.equal_orders():
        raise PreconditionError("orders of u and v differ at a common prime; use verify_formula6")
    setting = _setting(setting)
    ab = reduce_fraction(v / u)
    a, b = ab.numerator(), ab.denominator()
    for p, _, _ in part.both:
        if p.contains(a) or p.contains(b):
            raise AssertionError("reduced a, b meet a common prime")
    rhs = csum((div_frac(p, ab**n, setting) for p, n, _ in part.both), u.vars, len(u.vars) - 2)
    rep = IdentityReport("equal orders", data={"a": a, "b": b})
    rep.add("commutator = sum div(p_i, a^n_i/b^n_i)", commutator(u, v, setting), rhs)
    return rep


def verify_single_prime(u: FactoredElement, v: FactoredElement,
                        setting: Setting | None = None) -> IdentityReport:
    """Exactly one common prime p: commutator = div(p, a/b) with a/b = v^n/u^m."""
    part = support_partition(u, v)
    if part.r != 1:
        raise PreconditionError(f"expected exactly one common prime, found {part.r}")
    setting = _setting(setting)
    (p, n, m), = part.both
    ab = reduce_fraction(v**n / u**m)
    rep = IdentityReport("single prime", data={"prime": p, "a": ab.numerator(), "b": ab.denominator()})
    rep.add("commutator = div(p, a/b)", commutator(u, v, setting), div_frac(p, ab, setting))
    # the same argument applied to u^m, v^n, where the orders agree
    rep.add("commutator(u^m, v^n) = div(p, (a/b)^mn)",
            commutator(u**m, v**n, setting), div_frac(p, ab ** (m * n), setting))
    return rep


def verify_ab_swap(u: FactoredElement, v: FactoredElement, perturbation: Sequence[tuple[Poly, int]],
                   setting: Setting | None = None) -> IdentityReport:
    """Swap the roles of {u, v} and {a, b}.

    With a/b = v/u (equal orders) and a' = a J, b' = b J for J = prod J_h^l_h:
    (b') cap (a') cap [A] - (a') cap (b') cap [A] = sum_h div(J_h, v^l_h / u^l_h).
    """
    part = support_partition(u, v)
    if not part.equal_orders():
        raise PreconditionError("orders of u and v differ at a common prime")
    setting = _setting(setting)
    vars = u.vars
    ab = reduce_fraction(v / u)
    a, b = ab.numerator(), ab.denominator()
    J = FactoredElement(vars, 1, perturbation)
    for f, _ in J.factors:
        for name, x in (("u", u), ("v", v), ("a", a), ("b", b)):
            if x.exponent(f):
                raise PreconditionError(f"perturbation factor {f} divides {name}")
    a2, b2 = a * J, b * J
    rhs = csum(
        (div_frac(HeightOnePrime(f), (v / u) ** lam, setting) for f, lam in J.factors),
        vars, len(vars) - 2,
    )
    rep = IdentityReport("a,b swap", data={"a": a2, "b": b2})
    rep.add("commutator(b', a') = sum div(J_h, v^l/u^l)", commutator(b2.as_factored(), a2.as_factored(), setting), rhs)
    return rep


@dataclass
class Lemma51Data:
    alpha: AlphaData
    a1: FactoredElement
    b1: FactoredElement
    witness: Witness
    J: tuple[tuple[Poly, int], ...]


def lemma51_data(u: FactoredElement, v: FactoredElement,
                 perturbation: Sequence[tuple[Poly, int]] = ()) -> Lemma51Data:
    part = support_partition(u, v)
    if part.r < 2:
        raise PreconditionError(f"needs at least two common primes, found {part.r}")
    alpha = alpha_sequence(part)
    if alpha.G == part.r:
        raise PreconditionError("all ratios n_i/m_i agree; use verify_formula6 or verify_equal_orders")
    _, n1, m1 = alpha.order[0]
    J = FactoredElement(u.vars, 1, perturbation)
    for f, _ in J.factors:
        if u.exponent(f) or v.exponent(f):
            raise PreconditionError(f"perturbation factor {f} divides u or v")
    ratio = reduce_fraction(v**n1 / u**m1)
    a1 = (ratio.numerator() * J).as_factored()
    b1 = (ratio.denominator() * J).as_factored()
    # b1 = u^m1 a1 / v^n1 must be a ring element
    assert reduce_fraction(u**m1 * a1 / v**n1) == b1
    order_w = {e.prime: e for e in make_witness(u, v)}
    witness = Witness(tuple(order_w[p] for p, _, _ in alpha.order))
    return Lemma51Data(alpha, a1, b1, witness, tuple(J.factors))


def verify_lemma51(u: FactoredElement, v: FactoredElement, perturbation: Sequence[tuple[Poly, int]] = (),
                   setting: Setting | None = None) -> IdentityReport:
    """The three-difference decomposition of the commutator of u^m1, v^n1 and its ingredients."""
    setting = _setting(setting)
    d = lemma51_data(u, v, perturbation)
    vars = u.vars
    g = len(vars) - 2
    A = Cycle.fundamental(vars)
    order, alphas, G = d.alpha.order, d.alpha.alphas, d.alpha.G
    _, n1, m1 = order[0]
    a1, b1 = d.a1, d.b1
    U, V = u**m1, v**n1
    U, V = U.as_factored(), V.as_factored()

    def cc(x, y):  # (x) cap (y) cap [A]
        return cap_chain([x, y], A, setting)

    def total(cycles):
        return csum(cycles, vars, g)

    lhs = cc(U, V) - cc(V, U)
    first = cc(U, a1) - cc(a1, U)
    second = cc(b1, V) - cc(V, b1)
    third = cc(a1, V) - cc(b1, U)
    J_terms = total(
        div_frac(HeightOnePrime(f), (v**n1 / u**m1) ** lam, setting) for f, lam in d.J
    )
    entries: list[WitnessEntry] = list(d.witness)
    rep = IdentityReport("three-term decomposition", data={
        "order": [str(p) for p, _, _ in order], "alpha": alphas, "G": G, "a1": a1, "b1": b1,
    })
    rep.add("lhs = first + second + third", lhs, first + second + third)
    rep.add("swap: (b1)(a1) - (a1)(b1) = sum div(J_h, ...)", cc(b1, a1) - cc(a1, b1), J_terms)
    rep.add("powers: (v^n1)(a1) - (u^m1)(b1) = sum div(J_h, ...)", cc(V, a1) - cc(U, b1), J_terms)
    rep.add(
        "first term = sum_{j>G} m1 div(p_j, a1^n_j/u^alpha_j)", first,
        total(div_frac(p, a1**n / u**al, setting).scale(m1)
              for (p, n, _), al in zip(order[G:], alphas[G:])),
    )
    rep.add(
        "first term = sum_{j>G} (m1 n1 div(p_j, a_j/b_j) + m1 n_j div(p_j, b1))", first,
        total(div_frac(p, e.a / e.b, setting).scale(m1 * n1) + div_cycle(p, b1, setting).scale(m1 * n)
              for (p, n, _), e in zip(order[G:], entries[G:])),
    )
    rep.add("second term = 0 (regular sequence)", second, Cycle.zero(vars, g))
    rep.add(
        "third term = sum_{j<=G} m_j n1 div(p_j, a1) - sum_j m1 n_j div(p_j, b1)", third,
        total(div_cycle(p, a1, setting).scale(m * n1) for p, _, m in order[:G])
        - total(div_cycle(p, b1, setting).scale(m1 * n) for p, n, _ in order),
    )
    for (p, n, m), al, e in zip(order, alphas, entries):
        rep.add(
            f"b1^n_j a_j^n1 / b_j^n1 = a1^n_j / u^alpha_j at {p}",
            reduce_fraction(b1**n * e.a**n1 / e.b**n1), reduce_fraction(a1**n / u**al),
        )
    for (p, n, m), e in zip(order[:G], entries[:G]):
        rep.add(f"m_j div(p_j, a1/b1) = m1 div(p_j, a_j/b_j) at {p}",
                div_frac(p, a1 / b1, setting).scale(m), div_frac(p, e.a / e.b, setting).scale(m1))
    rep.add("lhs = m1 n1 sum_j div(p_j, a_j/b_j)", lhs,
            total(div_frac(e.prime, e.a / e.b, setting) for e in entries).scale(m1 * n1))
    return rep


def verify_principal_P_length(u: FactoredElement, v: FactoredElement,
                              setting: Setting | None = None) -> IdentityReport:
    """With P = gA, g = prod p_i^n_i, u = g u', v = g v' (equal orders), at every
    height-two coordinate prime m:

    l(A/(v', u)) = sum_l t_l l(A/(q_l, u)) and l(A/(u', v)) = sum_k s_k l(A/(q'_k, v)),
    and l(A/(v', g)) - l(A/(u', g)) is the coefficient of [A/m] in sum_i div(p_i, (a/b)^n_i).
    """
    part = support_partition(u, v)
    if not part.equal_orders():
        raise PreconditionError("orders of u and v differ at a common prime")
    setting = _setting(setting)
    vars = u.vars
    g = FactoredElement(vars, 1, [(p.generator, n) for p, n, _ in part.both])
    u1 = (u / g).as_factored()
    v1 = (v / g).as_factored()
    ab = reduce_fraction(v / u)
    rhs = csum((div_frac(p, ab**n, setting) for p, n, _ in part.both), vars, len(vars) - 2)
    rep = IdentityReport("principal P lengths", data={"g": g, "u'": u1, "v'": v1})
    for m in height_two_coordinate_primes(vars):
        L = lambda *gens: coord_local_length(m, gens)  # noqa: E731
        rep.add(f"l(P/(vA+uP)) at {m}", L(v1, u), sum(t * L(_elt(q), u) for q, t in part.only_v))
        rep.add(f"l(P/(uA+vP)) at {m}", L(u1, v), sum(s * L(_elt(q), v) for q, s in part.only_u))
        rep.add(f"l(A/(Q+P)) - l(A/(Q'+P)) at {m}", L(v1, g) - L(u1, g), rhs.coefficient(m))
    return rep


def verify_on_divisor(p: HeightOnePrime, u: FactoredElement, x: FactoredElement,
                      setting: Setting | None = None) -> IdentityReport:
    """Commutativity on A/p for a variable p: (u) cap div(p, x) - (x) cap div(p, u)
    equals the witness sum over the height-one primes of A/p containing u and x.
    """
    name = p.generator.as_variable()
    if name is None:
        raise PreconditionError(f"{p} is not a coordinate hyperplane")
    if p.contains(u) or p.contains(x):
        raise PreconditionError(f"u and x must avoid {p}")
    setting = _setting(setting)
    vars = p.vars
    lhs = cap(u, div_cycle(p, x, setting), setting) - cap(x, div_cycle(p, u, setting), setting)

    def restrict(e: FactoredElement) -> FactoredElement:
        # the image in A/p: substitute the variable by zero, factor by factor
        factors = []
        unit = e.unit
        for f, k in e.factors:
            r = f.subs({name: 0})
            if r.is_constant():
                unit *= r.constant_value() ** k
            else:
                factors.append((r, k))
        return FactoredElement(vars, unit, factors)

    ub, xb = restrict(u), restrict(x)
    rhs = Cycle.zero(vars, len(vars) - 3)
    for q, n, m in support_partition(ub, xb).both:
        names = q.variable_names()
        if names is None:
            raise PreconditionError(f"{q} is not a coordinate prime")
        P = CoordinatePrime(vars, {name, *names})
        rhs = rhs + div_frac(P, reduce_fraction(xb**n / ub**m), setting)
    rep = IdentityReport(f"commutativity on A/{p}")
    rep.add("(u) cap div(p, x) - (x) cap div(p, u) = witness sum on A/p", lhs, rhs)
    return rep
