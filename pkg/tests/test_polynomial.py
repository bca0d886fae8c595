from fractions import Fraction

import pytest

from naq.algebra.polynomial import (Polynomial, falling_factor, monomials_of_degree,
                                    monomials_up_to, poly_add, poly_eval, poly_mul,
                                    poly_partial)
from naq.core.errors import DimensionMismatchError


def test_arithmetic(x3):
    x1, x2, _ = x3
    assert (x1 + x2) ** 2 == x1 ** 2 + 2 * x1 * x2 + x2 ** 2
    assert (x1 - x1).is_zero
    assert x1 * Fraction(1, 2) + Fraction(1, 2) * x1 == x1
    assert 1 - x1 == -(x1 - 1)
    assert (x1 ** 0) == 1


def test_degree_and_constants(x3):
    x1, x2, x3_ = x3
    assert Polynomial.zero(3).degree == -1
    assert Polynomial.one(3).degree == 0
    assert (x1 * x2 * x3_ + x1).degree == 3
    assert Polynomial.constant(3, Fraction(3, 4)).constant_value() == Fraction(3, 4)
    with pytest.raises(ValueError):
        x1.constant_value()


def test_partial_derivatives(x3):
    x1, x2, x3_ = x3
    f = x1 ** 3 * x2 + x3_
    assert f.partial(0) == 3 * x1 ** 2 * x2
    assert f.derivative((2, 1, 0)) == 6 * x1
    assert f.derivative((0, 0, 2)).is_zero
    assert f.derivative((2, 1, 0)) is f.derivative((2, 1, 0))


def test_evaluate_exact(x3):
    x1, x2, x3_ = x3
    f = x1 * x2 - Fraction(1, 2) * x3_ ** 2
    assert f.evaluate((2, 3, 1)) == Fraction(11, 2)
    assert f.evaluate((Fraction(1, 3), 3, 0)) == 1
    with pytest.raises(DimensionMismatchError):
        f.evaluate((1, 2))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        Polynomial.variable(2, 0) + Polynomial.variable(3, 0)


def test_to_expr(x3):
    x1, x2, x3_ = x3
    assert (x1 * x2 - Fraction(1, 2) * x3_ ** 2).to_expr() == "x1*x2 - 1/2*x3^2"
    assert Polynomial.zero(3).to_expr() == "0"
    assert (-x1 + 2).to_expr() == "-x1 + 2"


def test_terms_and_coefficients(x3):
    x1, x2, _ = x3
    f = 3 * x1 * x2 + x2 - 5
    assert f.coefficient((1, 1, 0)) == 3
    assert f.coefficient((2, 0, 0)) == 0
    assert list(f.terms()) == [(1, 1, 0), (0, 1, 0), (0, 0, 0)]
    assert len(f) == 3


def test_monomial_order():
    assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert monomials_up_to(2, 2) == ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
    assert len(monomials_up_to(6, 2)) == 28


@pytest.mark.parametrize("gamma, alpha, expected", [
    ((3, 1), (2, 0), 6),
    ((3, 1), (0, 2), 0),
    ((2, 2), (1, 1), 4),
    ((1, 0), (0, 0), 1),
])
def test_falling_factor(gamma, alpha, expected):
    assert falling_factor(gamma, alpha) == expected


def test_hash_matches_equality(x3):
    x1, x2, _ = x3
    assert hash(x1 * x2) == hash(x2 * x1)
    assert len({x1 + x2, x2 + x1, x1}) == 2


def test_function_forms(x3):
    x1, x2, x3_ = x3
    f = poly_add(x1 * x2, x3_)
    g = poly_mul(f, x1)
    assert g.to_expr() == "x1^2*x2 + x1*x3"
    assert poly_partial(g, 1) == 2 * x1 * x2 + x3_
    assert poly_partial(g, 3) == x1
    with pytest.raises(IndexError):
        poly_partial(g, 0)
    assert poly_eval(g, (Fraction(1, 2), 4, 2)) == 2
