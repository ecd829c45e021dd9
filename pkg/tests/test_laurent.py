from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from virtknot.laurent import Laurent, QuarterLaurentT, poly_A, poly_S, poly_ST

exps = st.integers(min_value=-6, max_value=6)
coeffs = st.integers(min_value=-5, max_value=5)
polys_st = st.dictionaries(st.tuples(exps, exps), coeffs, max_size=5).map(poly_ST)
polys_a = st.dictionaries(exps, coeffs, max_size=5).map(poly_A)


def test_zero_coefficients_dropped():
    p = poly_A({1: 2, 3: 0}) + poly_A({1: -2})
    assert p.is_zero()
    assert p.terms == {}
    assert str(p) == "0"


def test_rendering_descending_powers():
    assert str(poly_A({-2: -1, -4: -1})) == "-A^-2 - A^-4"
    assert str(poly_A({1: 1, -1: 1})) == "A + A^-1"
    assert str(poly_A({0: 3, 2: -2})) == "-2*A^2 + 3"
    assert str(poly_ST({(1, 1): 1, (0, 0): -1})) == "s t - 1"
    assert str(poly_S({-2: 1, 0: -1})) == "-1 + s^-2"


def test_quarter_rendering():
    q = QuarterLaurentT.from_A(poly_A({-2: -1, -4: -1}))
    assert str(q) == "-t^(1/2) - t"
    assert q.exponents() == [Fraction(1, 2), Fraction(1)]
    assert not q.has_integral_exponents()
    assert q.to_json() == [{"num": 2, "den": 4, "coeff": -1}, {"num": 4, "den": 4, "coeff": -1}]


def test_inverse_power_only_for_units():
    assert poly_A({3: -1}) ** -1 == poly_A({-3: -1})
    with pytest.raises(ArithmeticError):
        poly_A({1: 1, 0: 1}) ** -1
    with pytest.raises(ArithmeticError):
        poly_A({1: 2}) ** -1


def test_variable_mismatch():
    with pytest.raises(ValueError):
        poly_A({1: 1}) + poly_S({1: 1})


def test_exact_division_remainder():
    with pytest.raises(ArithmeticError):
        poly_ST({(1, 0): 1, (0, 0): 1}).exact_div(poly_ST({(0, 1): 1, (0, 0): 1}))
    with pytest.raises(ZeroDivisionError):
        poly_ST({(0, 0): 1}).exact_div(poly_ST({}))


@given(polys_st, polys_st)
def test_ring_axioms(p, q):
    assert p + q == q + p
    assert p * q == q * p
    assert (p - q) + q == p
    assert p * 1 == p


@given(polys_st, polys_st, polys_st)
def test_distributive(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys_st, polys_st)
def test_exact_division_inverts_multiplication(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p


@given(polys_a, st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3))
def test_evaluation_is_a_homomorphism(p, a, b):
    q = poly_A({1: a, 0: b})
    x = Fraction(3, 2)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)


@given(polys_st)
def test_json_round_trip(p):
    assert Laurent.from_json(p.to_json(), ("s", "t")) == p


@given(polys_a)
def test_substitute_inverse_is_an_involution(p):
    assert p.substitute_inverse().substitute_inverse() == p
