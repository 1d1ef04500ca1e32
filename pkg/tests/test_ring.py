import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jacring import (Domain, NotHomogeneous, ParseError, Polynomial, RingDescriptor, RingMismatch,
                     jacobian_generators, multiply, parse_polynomial)
from jacring.errors import CharacteristicError
from jacring.ring import FamilyTemplate, euler_identity_holds, format_polynomial, substitute

from conftest import FERMAT_QUARTIC, poly
from oracles import multinomial


def test_parse_family_member():
    f = poly("x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2", 4)
    assert len(f) == 5
    assert f.degree == 4
    assert f.is_homogeneous


@pytest.mark.parametrize("text", ["0", "x0*x1 - x1*x0", "3*x0 - 3*x0", "(x0+x1)^2 - x0^2 - 2*x0*x1 - x1^2"])
def test_parse_zero(text):
    f = poly(text, 2)
    assert f.is_zero
    assert f.terms == {}


def test_parse_grammar_pieces():
    R = RingDescriptor(3)
    f = parse_polynomial(" 2 * x0 ^ 2 * ( x1 + x2 ) ", R)
    assert f == parse_polynomial("2*x0^2*x1+2*x0^2*x2", R)
    assert parse_polynomial("-x0+x1", R) == -parse_polynomial("x0-x1", R)


@pytest.mark.parametrize("text, pos", [
    ("x0 + + x1", 5),
    ("x0^", 3),
    ("x0 * (x1 + x2", 13),
    ("x0 $ x1", 3),
    ("x9", 0),
    ("y0", 0),
    ("", 0),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, RingDescriptor(3))
    assert info.value.position == pos


def test_parse_requires_homogeneous():
    R = RingDescriptor(2)
    parse_polynomial("x0^2 + x1", R)
    with pytest.raises(NotHomogeneous):
        parse_polynomial("x0^2 + x1", R, require_homogeneous=True)


def test_multiply_examples():
    R1 = RingDescriptor(1)
    x = R1.variable(0)
    assert multiply(x, x) == parse_polynomial("x0^2", R1)
    R2 = RingDescriptor(2)
    s = parse_polynomial("x0+x1", R2)
    assert s * s == parse_polynomial("x0^2+2*x0*x1+x1^2", R2)


def test_multinomial_coefficient_of_eighth_power():
    R = RingDescriptor(4)
    ell = parse_polynomial("x0+x1+x2+x3", R)
    assert multinomial(8, [2, 2, 2, 2]) == 2520
    assert (ell ** 8).terms[(2, 2, 2, 2)] == 2520


def test_multiply_ring_mismatch():
    a = poly("x0", 2)
    b = poly("x0", 3)
    with pytest.raises(RingMismatch):
        multiply(a, b)
    c = poly("x0", 2, Domain(101))
    with pytest.raises(RingMismatch):
        a + c


def test_jacobian_generators():
    R1 = RingDescriptor(1)
    assert jacobian_generators([parse_polynomial("x0^3", R1)]) == [parse_polynomial("3*x0^2", R1)]
    R4 = RingDescriptor(4)
    F = parse_polynomial(FERMAT_QUARTIC, R4)
    assert jacobian_generators([F]) == [parse_polynomial(f"4*x{j}^3", R4) for j in range(4)]
    F2 = parse_polynomial("x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2", R4)
    expected = ["4*x0^3-4*x0*x1^2", "4*x1^3-4*x0^2*x1", "4*x2^3", "4*x3^3"]
    assert jacobian_generators([F2]) == [parse_polynomial(e, R4) for e in expected]


def test_jacobian_generators_omit_zero_and_reject_inhomogeneous():
    R = RingDescriptor(3)
    gens = jacobian_generators([parse_polynomial("x0^3+x1^3", R)])
    assert len(gens) == 2
    with pytest.raises(NotHomogeneous):
        jacobian_generators([parse_polynomial("x0^3+x1", R)])
    with pytest.raises(ValueError):
        jacobian_generators([])


def test_weighted_degree_and_derivative_degrees():
    R = RingDescriptor(5, (1, 1, 1, 2, 5))
    F = parse_polynomial("x0^10+x1^10+x2^10+x3^5+x4^2", R)
    assert F.degree == 10
    for g, j in zip(jacobian_generators([F]), range(5)):
        assert g.degree == 10 - R.weights[j]


def test_ring_descriptor_validation():
    with pytest.raises(ValueError):
        RingDescriptor(0)
    with pytest.raises(ValueError):
        RingDescriptor(2, (1, 0))
    with pytest.raises(ValueError):
        Domain(15)


def test_dim_matches_binomial():
    R = RingDescriptor(5)
    for k in range(8):
        assert R.dim(k) == len(R.monomials(k))


def test_monomial_order_is_graded_lex():
    R = RingDescriptor(3)
    assert R.monomials(2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def test_rational_domain_printing_roundtrip():
    R = RingDescriptor(2, domain=Domain.rationals())
    f = parse_polynomial("3/2*x0^2 - 7*x0*x1 + x1^2", R)
    assert f.terms[(2, 0)] == Fraction(3, 2)
    assert parse_polynomial(str(f), R) == f


def test_prime_field_reduces_rationals():
    R = RingDescriptor(1, domain=Domain(7))
    assert parse_polynomial("1/2*x0", R).terms[(1,)] == 4


def test_euler_identity():
    R = RingDescriptor(4, domain=Domain.rationals())
    F = parse_polynomial("x0^4+x1^4+x2^4+x3^4-5*x0^2*x1*x3+x1*x2^3", R)
    assert euler_identity_holds(F)
    Fp = parse_polynomial("x0^5+x1^5+x0*x1*x2^3", RingDescriptor(3, domain=Domain(5)))
    with pytest.raises(CharacteristicError):
        euler_identity_holds(Fp)


def test_euler_identity_weighted():
    R = RingDescriptor(3, (1, 2, 3), Domain.rationals())
    F = parse_polynomial("x0^6 + x1^3 + x2^2 + x0*x1*x2", R)
    assert euler_identity_holds(F)


def test_family_template():
    R = RingDescriptor(4)
    T = FamilyTemplate("x0^4+x1^4+x2^4+x3^4 - t*x0^2*x1^2", R)
    assert T.depends_on_parameter
    assert T.at(2) == parse_polynomial("x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2", R)
    assert T.at(Fraction(1, 2)) == parse_polynomial("x0^4+x1^4+x2^4+x3^4-1/2*x0^2*x1^2", R)
    assert not FamilyTemplate("x0^4 + x1^4", R).depends_on_parameter
    with pytest.raises(ParseError):
        FamilyTemplate("x0^4 - s*x1^4", R)


def test_substitute_linear_change():
    R = RingDescriptor(2)
    f = parse_polynomial("x0^2 - x1^2", R)
    g = substitute(f, [parse_polynomial("x0+x1", R), parse_polynomial("x0-x1", R)])
    assert g == parse_polynomial("4*x0*x1", R)


# -- properties -------------------------------------------------------------

R3 = RingDescriptor(3, domain=Domain(1000003))

exponents = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exponents, st.integers(-50, 50), max_size=6).map(lambda t: Polynomial(R3, t))


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_multiply_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@settings(max_examples=100, deadline=None)
@given(polys)
def test_print_parse_roundtrip(f):
    text = format_polynomial(f)
    assert parse_polynomial(text, R3) == f
    assert format_polynomial(parse_polynomial(text, R3)) == text


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 10 ** 6))
def test_product_degree_adds(d1, d2, seed):
    from jacring.ring import random_homogeneous
    rng = random.Random(seed)
    a = random_homogeneous(R3, d1, rng)
    b = random_homogeneous(R3, d2, rng)
    ab = a * b
    if not ab.is_zero:
        assert ab.degree == d1 + d2
