from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hallhodge.errors import ConsistencyError, DomainError
from hallhodge.laurent import LaurentPoly, ONE, Q, T, parse_laurent

polys = st.dictionaries(st.integers(-6, 6), st.integers(-10 ** 20, 10 ** 20), max_size=6).map(LaurentPoly)


def test_canonical_form_drops_zeros():
    assert LaurentPoly({1: 0, 2: 3}).terms == {2: 3}
    assert LaurentPoly({1: 2}) + LaurentPoly({1: -2}) == LaurentPoly()
    assert not LaurentPoly({0: 0})


@pytest.mark.parametrize("p, text", [
    (Q * Q - Q, "q^2 - q"),
    (ONE - T, "1 - q^-1"),
    (LaurentPoly(), "0"),
    (LaurentPoly({3: 2, 0: -5, -2: 1}), "2*q^3 - 5 + q^-2"),
    (-Q, "-q"),
    (Q - 1, "q - 1"),
])
def test_render(p, text):
    assert str(p) == text
    assert parse_laurent(text) == p


def test_render_other_variable():
    assert (1 + LaurentPoly({1: 1})).to_str("t") == "t + 1"
    assert parse_laurent("t^2 + t", "t") == LaurentPoly({2: 1, 1: 1})


def test_parse_rejects_garbage():
    for bad in ["", "q q", "x^2", "2 3"]:
        with pytest.raises(DomainError):
            parse_laurent(bad)


@given(polys)
def test_text_round_trip(p):
    assert parse_laurent(str(p)) == p


@given(polys, polys)
def test_evaluation_is_a_ring_homomorphism(a, b):
    for q0 in (2, 3, 5):
        assert (a + b)(q0) == a(q0) + b(q0)
        assert (a * b)(q0) == a(q0) * b(q0)
        assert (a - b)(q0) == a(q0) - b(q0)


@given(polys, polys)
def test_exact_division_recovers_factor(a, b):
    if b:
        assert (a * b).exact_div(b) == a


def test_inexact_division_raises():
    with pytest.raises(ConsistencyError):
        (Q * Q + 1).exact_div(Q + 1)


def test_evaluation_with_negative_exponents_is_exact():
    assert (ONE - T)(3) == Fraction(2, 3)
    assert (Q - 1)(3) == 2


def test_qm1_coefficients():
    assert Q.qm1_coefficients() == [1, 1]
    assert (Q - 1).qm1_coefficients() == [0, 1]
    assert (Q * Q).qm1_coefficients() == [1, 2, 1]
    with pytest.raises(DomainError):
        T.qm1_coefficients()


def test_degree_queries():
    p = LaurentPoly({-2: 1, 3: 4})
    assert p.degree() == 3 and p.low_degree() == -2 and p.leading_coefficient() == 4
    assert p.invert_variable() == LaurentPoly({2: 1, -3: 4})
    assert p.shift(2) == LaurentPoly({0: 1, 5: 4})
