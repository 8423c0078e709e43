import pytest
from hypothesis import given
from hypothesis import strategies as st

from leglab import laurent
from leglab.errors import NegativeCoefficient, ZeroPolynomial
from leglab.laurent import (
    HomologyVector,
    add,
    from_terms,
    is_palindromic_up_to_shift,
    monomial,
    mul_monomial,
    normalize_degree_zero,
    parse,
    render,
    to_vector,
    zero,
)


def test_from_terms_sums_and_drops():
    p = from_terms([(0, 2), (-1, 1)])
    assert p.terms() == ((-1, 1), (0, 2))
    assert from_terms([]).is_zero()
    assert from_terms([(2, 1), (2, -1)]).is_zero()


def test_degree_and_low_degree():
    p = from_terms([(3, 2), (2, 1)])
    assert p.degree() == 3
    assert p.low_degree() == 2
    with pytest.raises(ZeroPolynomial):
        zero().degree()


def test_normalize_degree_zero():
    p = from_terms([(3, 2), (2, 1)])
    q, shift = normalize_degree_zero(p)
    assert shift == -3
    assert q == from_terms([(0, 2), (-1, 1)])
    assert normalize_degree_zero(monomial(0)) == (monomial(0), 0)
    assert normalize_degree_zero(monomial(-5)) == (monomial(0), 5)
    with pytest.raises(ZeroPolynomial):
        normalize_degree_zero(zero())


def test_to_vector():
    v = to_vector(from_terms([(0, 2), (-1, 1)]))
    assert v.entries == (1, 2)
    assert v.lowest_exponent == -1
    assert to_vector(from_terms([(0, 1), (-4, 1)])).entries == (1, 0, 0, 0, 1)
    assert to_vector(from_terms([(0, 2)])).entries == (2,)
    with pytest.raises(ZeroPolynomial):
        to_vector(zero())
    with pytest.raises(NegativeCoefficient):
        to_vector(from_terms([(0, 1), (1, -1)]))


def test_palindromic():
    assert is_palindromic_up_to_shift(from_terms([(0, 1), (-1, 1)]))
    assert not is_palindromic_up_to_shift(from_terms([(0, 2), (-1, 1)]))
    assert is_palindromic_up_to_shift(monomial(7, 3))
    with pytest.raises(ZeroPolynomial):
        is_palindromic_up_to_shift(zero())


def test_ring_ops_examples():
    assert mul_monomial(from_terms([(0, 1), (-4, 1)]), 1) == from_terms([(1, 1), (-3, 1)])
    assert add(monomial(0), monomial(0)) == from_terms([(0, 2)])
    p = from_terms([(5, -2), (0, 3)])
    assert mul_monomial(p, 0) == p


def test_render_and_parse():
    p = from_terms([(0, 2), (-1, 1)])
    assert render(p) == "2*l^0 + 1*l^-1"
    assert parse("2*l^0 + 1*l^-1") == p
    assert render(zero()) == "0"
    assert parse("0").is_zero()
    assert render(p, var="z") == "2*z^0 + 1*z^-1"
    assert parse("1*z^2 + 2*z^0 + 1*z^-2") == from_terms([(2, 1), (0, 2), (-2, 1)])
    with pytest.raises(ValueError):
        parse("1*l^2 + 2*z^0")
    with pytest.raises(ValueError):
        parse("l + 1")


def test_vector_render_parse():
    v = HomologyVector((1, 2), -1)
    assert v.render() == "(1,2)@-1"
    assert HomologyVector.parse("(1,2)@-1") == v
    assert v.to_poly() == from_terms([(0, 2), (-1, 1)])
    with pytest.raises(ValueError):
        HomologyVector((0, 1), 0)
    with pytest.raises(NegativeCoefficient):
        HomologyVector((1, -1, 1), 0)


def test_poly_hashable():
    a = from_terms([(0, 1), (2, 3)])
    b = from_terms([(2, 3), (0, 1)])
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


polys = st.lists(
    st.tuples(st.integers(-8, 8), st.integers(-5, 5)), max_size=6
).map(from_terms)


@given(polys, polys, polys)
def test_add_ring_axioms(p, q, r):
    assert add(p, q) == add(q, p)
    assert add(add(p, q), r) == add(p, add(q, r))
    assert add(p, zero()) == p


@given(polys, polys, st.integers(-6, 6), st.integers(-6, 6))
def test_mul_monomial_axioms(p, q, e, f):
    assert mul_monomial(add(p, q), e) == add(mul_monomial(p, e), mul_monomial(q, e))
    assert mul_monomial(mul_monomial(p, e), f) == mul_monomial(p, e + f)


@given(polys)
def test_normalize_properties(p):
    if p.is_zero():
        return
    q, shift = normalize_degree_zero(p)
    assert q.degree() == 0
    assert mul_monomial(p, shift) == q
    assert is_palindromic_up_to_shift(p) == is_palindromic_up_to_shift(q)


@given(polys)
def test_render_round_trip(p):
    assert parse(render(p)) == p


@given(st.lists(st.tuples(st.integers(-8, 8), st.integers(0, 5)), max_size=6).map(from_terms))
def test_vector_round_trip(p):
    if p.is_zero():
        return
    assert to_vector(p).to_poly() == p
    assert HomologyVector.parse(to_vector(p).render()) == to_vector(p)
