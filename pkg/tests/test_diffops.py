from fractions import Fraction

from naq.algebra.diffops import (BidiffOperator, DiffOperator, bidiff_antisymmetrize,
                                 bidiff_apply, bidiff_orders, bidiff_total_order)
from naq.algebra.polynomial import Polynomial
from naq.poisson.constructors import su2


def test_apply_and_orders():
    n = 2
    x1, x2 = Polynomial.variable(n, 0), Polynomial.variable(n, 1)
    # x2 d1 f d1 g + 1/2 d2^2 f g
    op = BidiffOperator.from_mapping(n, {
        ((1, 0), (1, 0)): x2,
        ((0, 2), (0, 0)): Fraction(1, 2),
    })
    assert op.apply(x1 ** 2, x1) == 2 * x1 * x2
    assert op.apply(x2 ** 2, Polynomial.constant(n, 3)) == 3
    assert bidiff_orders(op) == (2, 1)
    assert bidiff_total_order(op) == 2
    assert BidiffOperator.empty(n).is_empty
    assert bidiff_orders(BidiffOperator.empty(n)) == (0, 0)


def test_terms_merge_and_cancel():
    n = 2
    op = BidiffOperator.from_mapping(n, {((1, 0), (0, 1)): 1})
    assert (op - op).is_empty
    assert (op + op).mapping() == {((1, 0), (0, 1)): Polynomial.constant(n, 2)}


def test_antisymmetrized_bracket_is_itself():
    op = su2().bracket_operator
    assert op.antisymmetrized() == op
    assert (op + op.swapped()).is_empty


def test_interpolation_recovers_normal_form():
    op = su2().bracket_operator
    recovered = BidiffOperator.interpolate(
        3, lambda gamma, delta: op.apply(Polynomial.monomial(3, gamma),
                                         Polynomial.monomial(3, delta)), 1, 1)
    assert recovered == op


def test_interpolation_of_second_order_operator():
    n = 2
    x1 = Polynomial.variable(n, 0)
    op = BidiffOperator.from_mapping(n, {
        ((2, 0), (0, 1)): x1 + 1,
        ((1, 1), (0, 0)): Fraction(-1, 3),
        ((0, 0), (0, 0)): 5,
    })
    recovered = BidiffOperator.interpolate(
        n, lambda gamma, delta: op.apply(Polynomial.monomial(n, gamma),
                                         Polynomial.monomial(n, delta)), 2, 1)
    assert recovered == op


def test_diff_operator_interpolation():
    n = 2
    x2 = Polynomial.variable(n, 1)
    D = DiffOperator(n, {(1, 0): x2, (0, 2): Fraction(1, 2)})
    assert D.order == 2
    assert D.apply(Polynomial.monomial(n, (1, 2))) == x2 ** 3 + Polynomial.variable(n, 0)
    recovered = DiffOperator.interpolate(n, lambda gamma: D.apply(Polynomial.monomial(n, gamma)), 2)
    assert recovered == D


def test_function_forms():
    x1, x2 = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    op = BidiffOperator.from_mapping(2, {((1, 0), (0, 1)): 1})
    assert bidiff_apply(op, x1 ** 2, x2) == 2 * x1
    half = bidiff_antisymmetrize(op)
    assert bidiff_apply(half, x1, x2) == Fraction(1, 2)
    assert bidiff_apply(half, x2, x1) == Fraction(-1, 2)
