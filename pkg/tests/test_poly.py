from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divcap.errors import ContextError, ParseError
from divcap.factored import FactoredElement, expand
from divcap.parse import parse_element, parse_frac, parse_poly
from divcap.poly import Poly

XYZ = ("x", "y", "z")
x, y, z = Poly.gens(XYZ)


def test_difference_of_squares():
    assert (x + y) * (x - y) == x**2 - y**2


def test_add_zero_is_identity():
    p = 3 * x**2 * y - Fraction(1, 2) * z
    assert p + Poly.zero(XYZ) == p


def test_zero_polynomial_has_no_terms():
    assert (x - x).terms == {}
    assert (x - x).is_zero()


def test_product_of_factors_gives_u():
    vars = ("x", "w", "rho", "y", "z")
    X, W, RHO, _, Z = Poly.gens(vars)
    u = FactoredElement(vars, 1, [(X, 2), (W, 3), (RHO, 1), (Z, 2)])
    assert expand(u) == X**2 * W**3 * RHO * Z**2
    assert str(u) == "x^2*w^3*rho*z^2"


def test_expand_examples():
    assert expand(FactoredElement(XYZ, 1, [(x, 1), (z, 1)])) == x * z
    assert expand(FactoredElement(XYZ, 5, [])) == Poly.constant(XYZ, 5)
    assert expand(FactoredElement(XYZ, 1, [(x + y, 2)])) == x**2 + 2 * x * y + y**2


def test_grlex_leading_term():
    # total degree first, then the first variable is largest
    assert (x * y + z**2 + x**2).leading()[0] == (2, 0, 0)
    assert (y**3 + x * z).leading()[0] == (0, 3, 0)


def test_context_mismatch():
    with pytest.raises(ContextError):
        Poly.variable(("x", "y"), "x") + Poly.variable(("x", "z"), "x")


def test_exact_div_and_subs():
    f = (x + y) * (x - 2 * z)
    assert f.exact_div(x + y) == x - 2 * z
    assert f.subs({"x": 0}) == -2 * y * z


def test_parser_juxtaposition_and_split_identifiers():
    vars = ("x", "w", "rho", "y", "z")
    e = parse_element("x^2w^3rhoz^2", vars)
    assert str(e) == "x^2*w^3*rho*z^2"
    assert parse_element("x**4 * w^6 * rho^3 * y", vars) == parse_element("x^4w^6rho^3y", vars)


def test_parser_fraction():
    f = parse_frac("y^2/z^8", XYZ)
    assert f.exponent(y) == 2 and f.exponent(z) == -8


def test_parser_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse_poly("x + * y", XYZ)
    assert info.value.position is not None
    assert "^" in str(info.value)
    with pytest.raises(ParseError):
        parse_poly("q", XYZ)


def _polys(vars=XYZ):
    term = st.tuples(
        st.tuples(*(st.integers(0, 3) for _ in vars)),
        st.fractions(min_value=-5, max_value=5, max_denominator=4),
    )
    return st.lists(term, max_size=5).map(lambda ts: Poly(vars, dict(ts)))


@settings(max_examples=60, deadline=None)
@given(_polys(), _polys(), _polys())
def test_ring_axioms(a, b, c):
    zero, one = Poly.zero(XYZ), Poly.constant(XYZ, 1)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a and a * one == a
    assert a - a == zero


@settings(max_examples=60, deadline=None)
@given(_polys(), _polys())
def test_exact_division_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


@settings(max_examples=60, deadline=None)
@given(_polys())
def test_print_parse_round_trip(a):
    assert parse_poly(str(a), XYZ) == a


@settings(max_examples=40, deadline=None)
@given(_polys(), st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_evaluation_is_a_homomorphism(a, t):
    b = a * a + x
    point = {"x": t, "y": Fraction(2), "z": Fraction(-1, 3)}
    assert b.evaluate(point) == a.evaluate(point) ** 2 + t
