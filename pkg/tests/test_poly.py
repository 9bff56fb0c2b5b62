from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from distp3.coeffs import GF, QQ
from distp3.poly import (
    DEGREVLEX,
    LEX,
    P3,
    FieldMismatchError,
    PolynomialSyntaxError,
    UnknownVariableError,
    block_order,
    divide_exact,
    monomials_of_degree,
    parse,
    partial_derivative,
)

x0, x1, x2, x3 = P3.gens

exponents = st.tuples(*[st.integers(0, 3)] * 4)
coeffs = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def polynomials(draw, ring=P3, max_terms=20):
    terms = draw(st.dictionaries(exponents, coeffs, max_size=max_terms))
    return ring.from_dict(terms)


@st.composite
def forms(draw, ring=P3):
    deg = draw(st.integers(0, 5))
    mons = monomials_of_degree(4, deg)
    chosen = draw(st.lists(st.sampled_from(mons), max_size=20, unique=True))
    return ring.from_dict({m: draw(coeffs) for m in chosen})


def test_parse_examples():
    p = parse("x0^2 - 3*x1*x2")
    assert p.as_dict() == {(2, 0, 0, 0): 1, (0, 1, 1, 0): -3}
    assert parse("x0 + x0").as_dict() == {(1, 0, 0, 0): 2}
    assert parse(" ( x0 + 1/2 ) ^ 2 ") == x0 * x0 + x0 + P3.constant(Fraction(1, 4))


def test_parse_errors_carry_positions():
    with pytest.raises(UnknownVariableError):
        parse("x4")
    with pytest.raises(PolynomialSyntaxError) as err:
        parse("x0 x1")
    assert err.value.position == 3
    for bad in ["x0 +", "2/0", "x0^-1", "(x0", "x0 ** 2", ""]:
        with pytest.raises(PolynomialSyntaxError):
            parse(bad)


def test_printing_is_canonical():
    assert str(parse("-3*x2*x1 + x0^2")) == "x0^2 - 3*x1*x2"
    assert str(P3.zero) == "0"
    assert str(parse("1/2*x3 - 1")) == "1/2*x3 - 1"


@given(polynomials())
def test_round_trip(p):
    assert parse(str(p)) == p


@given(polynomials(ring=P3.with_field(GF(32003))))
def test_round_trip_prime_field(p):
    assert P3.with_field(GF(32003)).parse(str(p)) == p


@given(polynomials(max_terms=8), polynomials(max_terms=8), polynomials(max_terms=8))
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p - p == P3.zero
    assert p * P3.zero == P3.zero


@given(forms(), forms())
def test_product_of_forms_is_homogeneous(p, q):
    prod = p * q
    if prod:
        assert prod.is_homogeneous()
        assert prod.degree == p.degree + q.degree


def test_arithmetic_examples():
    assert (x0 + x1) * (x0 - x1) == x0**2 - x1**2
    m = x0**2 * x1**3
    assert m.degree == 5 and len(m) == 1


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        _ = x0 + P3.with_field(GF(7)).gen(1)


def test_partial_derivative_examples():
    assert partial_derivative(x0**2 * x3, 0) == 2 * x0 * x3
    assert partial_derivative(x0**2, 2) == P3.zero


@given(forms())
def test_euler_identity(p):
    lhs = sum((P3.gen(i) * partial_derivative(p, i) for i in range(4)), P3.zero)
    assert lhs == p * max(p.degree, 0)


@given(polynomials(max_terms=8), polynomials(max_terms=8), st.integers(0, 3))
def test_leibniz(p, q, i):
    assert partial_derivative(p * q, i) == partial_derivative(p, i) * q + p * partial_derivative(q, i)


@given(st.dictionaries(exponents, st.integers(-(10**6), 10**6), max_size=10),
       st.dictionaries(exponents, st.integers(-(10**6), 10**6), max_size=10))
def test_prime_reduction_is_a_ring_map(a, b):
    F = GF(32003)
    p, q = P3.from_dict(a), P3.from_dict(b)
    pf, qf = p.change_field(F), q.change_field(F)
    assert (p * q + p).change_field(F) == pf * qf + pf
    assert pf.ring == P3.with_field(F)


def test_orders():
    a, b = (1, 0, 0, 1), (0, 2, 0, 0)
    assert DEGREVLEX.key(a) < DEGREVLEX.key(b)  # x0*x3 < x1^2 in degrevlex
    assert LEX.key(a) > LEX.key(b)
    blk = block_order(1)
    assert blk.key((1, 0, 0, 0)) > blk.key((0, 5, 0, 0))


@given(exponents, exponents, exponents)
def test_orders_are_multiplicative(a, b, c):
    for order in (DEGREVLEX, LEX, block_order(2)):
        if order.key(a) < order.key(b):
            ac = tuple(i + k for i, k in zip(a, c))
            bc = tuple(j + k for j, k in zip(b, c))
            assert order.key(ac) < order.key(bc)


def test_monomials_of_degree_counts():
    assert [len(monomials_of_degree(4, d)) for d in range(5)] == [1, 4, 10, 20, 35]


def test_divide_exact():
    assert divide_exact(x0**2 - x1**2, x0 + x1) == x0 - x1
    with pytest.raises(ValueError):
        divide_exact(x0**2 + x1, x0)


def test_leading_terms_and_monic():
    p = parse("3*x1^2 + 6*x0*x3")
    assert p.leading_monomial() == (0, 2, 0, 0)
    assert p.leading_monomial(LEX) == (1, 0, 0, 1)
    assert p.monic() == parse("x1^2 + 2*x0*x3")
    assert QQ.to_fraction(p.leading_coefficient()) == 3
