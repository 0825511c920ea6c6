from fractions import Fraction

import pytest

from divcap import random_instances as R
from divcap.errors import PreconditionError
from divcap.factored import FactoredElement, FracElement, expand, reduce_fraction
from divcap.parse import parse_element, parse_frac
from divcap.poly import Poly
from divcap.primes import (
    HeightOnePrime,
    WitnessEntry,
    alpha_sequence,
    check_witness_entry,
    make_witness,
    perturb_witness,
    support_partition,
    valuation,
)

V5 = ("x", "w", "rho", "y", "z")
U5 = parse_element("x^2w^3rhoz^2", V5)
W5 = parse_element("x^4w^6rho^3y", V5)
XYZ = ("x", "y", "z")


def p(name, vars=V5):
    return HeightOnePrime.variable(vars, name)


def test_reduce_fraction_examples():
    assert str(reduce_fraction(W5**2 / U5**4)) == "rho^2*y^2/z^8"
    assert str(reduce_fraction(W5 / U5**3)) == "y/(x^2*w^3*z^6)"
    assert reduce_fraction(U5 / U5) == FracElement.one(V5)


def test_reduce_fraction_merges_associates_and_cancels():
    x, y, z = Poly.gens(XYZ)
    raw = FracElement.unreduced(XYZ, 1, [(2 * x + 2 * y, 2), (x, 1), (-x - y, -1), (x, -1)])
    red = reduce_fraction(raw)
    assert red.factors == ((x + y, 1),) and red.unit == 2 * 2 / -1
    # cross-multiplication: num * other_den == other_num * den
    assert expand(red.numerator()) * 1 == (x + y) * red.unit


def test_reduced_form_is_canonical(rng):
    # different presentations of one element reduce to the same object
    for _ in range(200):
        vars = R.context(rng, 2, 5)
        f = R.laurent(rng, vars)
        extra = [(Poly.variable(vars, rng.choice(vars)), rng.randint(1, 3)) for _ in range(2)]
        noisy = FracElement.unreduced(vars, f.unit, list(f.factors) + extra + [(g, -e) for g, e in extra])
        assert reduce_fraction(noisy) == f
        assert hash(reduce_fraction(noisy)) == hash(f)


def test_valuation_examples():
    assert valuation(p("x"), U5) == 2
    assert valuation(p("y"), U5) == 0
    assert valuation(p("x"), W5**2 / U5**4) == 0


def test_valuation_is_additive(rng):
    for _ in range(300):
        vars = R.context(rng, 2, 6)
        f, g = R.laurent(rng, vars), R.laurent(rng, vars)
        q = HeightOnePrime.variable(vars, rng.choice(vars))
        k = rng.randint(-3, 3)
        assert valuation(q, f * g) == valuation(q, f) + valuation(q, g)
        assert valuation(q, f**k) == k * valuation(q, f)
        assert valuation(q, f / g) == valuation(q, f) - valuation(q, g)


def test_support_partition_examples():
    u, v = parse_element("xz", XYZ), parse_element("xy", XYZ)
    part = support_partition(u, v)
    assert [(str(q), n, m) for q, n, m in part.both] == [("(x)", 1, 1)]
    assert [(str(q), s) for q, s in part.only_u] == [("(z)", 1)]
    assert [(str(q), t) for q, t in part.only_v] == [("(y)", 1)]

    part = support_partition(U5, W5)
    assert [(str(q), n, m) for q, n, m in part.both] == [("(x)", 2, 4), ("(w)", 3, 6), ("(rho)", 1, 3)]
    assert [(str(q), s) for q, s in part.only_u] == [("(z)", 2)]
    assert [(str(q), t) for q, t in part.only_v] == [("(y)", 1)]

    part = support_partition(U5, FactoredElement.one(V5))
    assert part.both == () and part.only_v == ()


def test_support_partition_invariants(rng):
    for _ in range(300):
        pair = R.monomial_pair(rng)
        part = support_partition(pair.u, pair.v)
        primes = [q for q, *_ in part.both] + [q for q, _ in part.only_u] + [q for q, _ in part.only_v]
        assert len(primes) == len(set(primes))
        for q, n, m in part.both:
            assert n == valuation(q, pair.u) > 0 and m == valuation(q, pair.v) > 0
        for q, s in part.only_u:
            assert s == valuation(q, pair.u) > 0 and valuation(q, pair.v) == 0
        for q, t in part.only_v:
            assert t == valuation(q, pair.v) > 0 and valuation(q, pair.u) == 0


def test_make_witness_examples():
    w = make_witness(U5, W5)
    assert [(str(e.prime), str(e.a), str(e.b)) for e in w] == [
        ("(x)", "rho^2*y^2", "z^8"),
        ("(w)", "rho^3*y^3", "z^12"),
        ("(rho)", "y", "x^2*w^3*z^6"),
    ]
    w = make_witness(parse_element("xz", XYZ), parse_element("xy", XYZ))
    assert [(str(e.prime), str(e.a / e.b)) for e in w] == [("(x)", "y/z")]
    assert make_witness(parse_element("x^2", XYZ), parse_element("y^3z", XYZ)).is_empty()


def test_witness_soundness(rng):
    for _ in range(500):
        pair = R.monomial_pair(rng, min_common=1)
        w = make_witness(pair.u, pair.v)
        assert len(w) == support_partition(pair.u, pair.v).r
        for e in w:
            check_witness_entry(e, pair.u, pair.v)
            assert valuation(e.prime, e.a) == 0 and valuation(e.prime, e.b) == 0
            assert reduce_fraction(e.a / e.b) == reduce_fraction(pair.v**e.n / pair.u**e.m)
        # a perturbed witness satisfies the same invariants
        spare = [x for x in pair.vars if all(e.prime.generator.as_variable() != x for e in w)]
        if spare:
            j = Poly.variable(pair.vars, spare[0])
            for e in perturb_witness(w, [(j, 2)]):
                check_witness_entry(e, pair.u, pair.v)


def test_check_witness_entry_rejects_bad_pairs():
    x = Poly.variable(XYZ, "x")
    u, v = parse_element("xz", XYZ), parse_element("xy", XYZ)
    bad = WitnessEntry(HeightOnePrime(x), parse_element("xy", XYZ), parse_element("xz", XYZ), 1, 1)
    with pytest.raises(PreconditionError):
        check_witness_entry(bad, u, v)
    wrong = WitnessEntry(HeightOnePrime(x), parse_element("y^2", XYZ), parse_element("z", XYZ), 1, 1)
    with pytest.raises(PreconditionError):
        check_witness_entry(wrong, u, v)


def test_alpha_sequence_examples():
    al = alpha_sequence(support_partition(U5, W5))
    assert [str(q) for q, _, _ in al.order] == ["(x)", "(w)", "(rho)"]
    assert al.alphas == (0, 0, 2) and al.G == 2

    single = alpha_sequence(support_partition(parse_element("x^2y", XYZ), parse_element("x^5", XYZ)))
    assert single.alphas == (0,) and single.G == 1

    # n = (3, 1), m = (1, 1): ratios 3 > 1, alpha_2 = n1 m2 - m1 n2 = 3 - 1 = 2
    u, v = parse_element("x^3y", XYZ), parse_element("xy", XYZ)
    assert alpha_sequence(support_partition(u, v)).alphas == (0, 2)


def test_alpha_sign_pattern(rng):
    for _ in range(500):
        pair = R.monomial_pair(rng, min_common=1)
        al = alpha_sequence(support_partition(pair.u, pair.v))
        ratios = [Fraction(n, m) for _, n, m in al.order]
        assert ratios == sorted(ratios, reverse=True)
        assert all(a == 0 for a in al.alphas[: al.G])
        assert all(a > 0 for a in al.alphas[al.G:])
        assert al.G >= 1


def test_alpha_sequence_needs_a_common_prime():
    with pytest.raises(PreconditionError):
        alpha_sequence(support_partition(parse_element("x", XYZ), parse_element("y", XYZ)))


def test_parse_frac_keeps_negative_exponents():
    f = parse_frac("x^-2 y", XYZ)
    assert valuation(HeightOnePrime.variable(XYZ, "x"), f) == -2
