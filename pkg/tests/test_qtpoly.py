from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qtkostka.qtpoly import QTPoly


def poly(*triples):
    return QTPoly.from_terms(triples)


def test_constructors():
    assert QTPoly.zero() == QTPoly({})
    assert QTPoly.one() == QTPoly({(0, 0): 1})
    assert QTPoly.q(2) == QTPoly({(2, 0): 1})
    assert QTPoly.t() == QTPoly({(0, 1): 1})
    assert not QTPoly.zero()
    assert QTPoly.one()


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        QTPoly({(-1, 0): 1})
    with pytest.raises(ValueError):
        QTPoly.monomial(0, -2, 5)


def test_zero_coefficients_dropped():
    assert QTPoly({(1, 1): 0}) == QTPoly.zero()
    assert (QTPoly.q(1) - QTPoly.q(1)) == QTPoly.zero()


def test_arithmetic():
    p = QTPoly.one() + QTPoly.monomial(1, 1)
    assert p * p == poly((0, 0, 1), (1, 1, 2), (2, 2, 1))
    assert 2 * QTPoly.q(1) == QTPoly.monomial(1, 0, 2)
    assert QTPoly.one() - 2 * QTPoly.q(1) + 2 * QTPoly.q(3) == poly(
        (0, 0, 1), (1, 0, -2), (3, 0, 2)
    )
    assert QTPoly.t(1) ** 3 == QTPoly.t(3)
    assert QTPoly.q(1) ** 0 == QTPoly.one()


def test_degrees():
    p = poly((2, 3, 4), (0, 1, 1))
    assert p.deg_q == 2 and p.deg_t == 3
    assert QTPoly.zero().deg_q == 0


def test_evaluate():
    p = poly((1, 0, 1), (0, 1, 1))
    assert p.evaluate(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_evaluate_t_only():
    p = QTPoly.t(2) + QTPoly.one()
    assert p.evaluate_t(Fraction(1, 2)) == Fraction(5, 4)
    with pytest.raises(ValueError):
        QTPoly.q(1).evaluate_t(Fraction(1, 2))


def test_q_zero_and_swap():
    p = poly((0, 1, 1), (1, 0, 3), (2, 2, 5))
    assert p.q_zero() == QTPoly.t(1)
    assert p.swap_qt() == poly((1, 0, 1), (0, 1, 3), (2, 2, 5))


def test_reverse():
    # reverse over the box (2, 3): exponent (a, b) -> (2-a, 3-b)
    p = poly((0, 0, 1), (2, 3, 4), (1, 1, 2))
    assert p.reverse(2, 3) == poly((2, 3, 1), (0, 0, 4), (1, 2, 2))
    with pytest.raises(ValueError):
        p.reverse(1, 3)


def test_json_round_trip():
    p = poly((0, 0, 1), (3, 2, 7), (1, 5, -2))
    assert QTPoly.from_terms(p.to_terms()) == p
    assert p.to_terms() == [[0, 0, "1"], [1, 5, "-2"], [3, 2, "7"]]


def test_str_forms():
    assert str(QTPoly.zero()) == "0"
    assert str(QTPoly.one() + QTPoly.monomial(1, 1)) == "1 + q*t"
    assert (QTPoly.one() + QTPoly.monomial(1, 1)).latex() == "1 + qt"


coeffs = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-5, 5), max_size=5
)


@given(coeffs, coeffs, coeffs)
def test_ring_laws(a, b, c):
    p, q, r = QTPoly(a), QTPoly(b), QTPoly(c)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == QTPoly.zero()


@given(coeffs)
def test_swap_and_reverse_involutive(a):
    p = QTPoly(a)
    assert p.swap_qt().swap_qt() == p
    assert p.reverse(p.deg_q, p.deg_t).reverse(p.deg_q, p.deg_t) == p
