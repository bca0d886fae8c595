from fractions import Fraction

import pytest

from naq.algebra.polynomial import Polynomial
from naq.algebra.series import (LambdaSeries, series_add, series_lowest_order,
                                series_pointwise_mul)
from naq.core.errors import DimensionMismatchError, TruncationMismatchError


def series(*coefficients, n=2):
    return LambdaSeries([c if isinstance(c, Polynomial) else Polynomial.constant(n, c)
                         for c in coefficients])


def test_lam_and_truncation():
    lam = LambdaSeries.lam(2, 2)
    assert lam.to_exprs() == ["0", "1", "0"]
    assert lam.pointwise_mul(lam).to_exprs() == ["0", "0", "1"]
    assert lam.pointwise_mul(lam).pointwise_mul(lam).is_zero
    assert LambdaSeries.lam(2, 0).is_zero


def test_arithmetic_is_coefficientwise():
    a = series(1, 2, 3)
    b = series(0, 1, -3)
    assert (a + b).to_exprs() == ["1", "3", "0"]
    assert (a - a).is_zero
    assert (-a).to_exprs() == ["-1", "-2", "-3"]
    assert (Fraction(1, 2) * a).to_exprs() == ["1/2", "1", "3/2"]


def test_lowest_order():
    x1 = Polynomial.variable(2, 0)
    s = LambdaSeries.from_polynomial(x1, 3, lambda_order=2)
    assert s.lowest_order() == (2, x1)
    assert LambdaSeries.zero(2, 3).lowest_order() is None
    assert LambdaSeries.from_polynomial(x1, 1, lambda_order=2).is_zero


def test_shift_truncates():
    assert series(1, 2, 3).shift(1).to_exprs() == ["0", "1", "2"]


def test_mismatches_raise():
    with pytest.raises(TruncationMismatchError):
        series(1, 2) + series(1, 2, 3)
    with pytest.raises(DimensionMismatchError):
        series(1, 2) + series(1, 2, n=3)
    with pytest.raises(TruncationMismatchError):
        LambdaSeries.lift(series(1, 2), 2, 3)


def test_lift_scalars_and_polynomials():
    x1 = Polynomial.variable(2, 0)
    assert LambdaSeries.lift(x1, 2, 1).to_exprs() == ["x1", "0"]
    assert LambdaSeries.lift(Fraction(2, 3), 2, 1).to_exprs() == ["2/3", "0"]
    with pytest.raises(DimensionMismatchError):
        LambdaSeries.lift(Polynomial.variable(3, 0), 2, 1)


def test_function_forms():
    x1 = Polynomial.variable(2, 0)
    a = series(0, x1, 2)
    b = series(1, 0, x1)
    assert series_add(a, b).to_exprs() == ["1", "x1", "x1 + 2"]
    assert series_pointwise_mul(a, b).to_exprs() == ["0", "x1", "2"]
    assert series_lowest_order(a) == (1, x1)
    assert series_lowest_order(LambdaSeries.zero(2, 2)) is None


def test_pointwise_mul_rejects_non_series():
    with pytest.raises(TypeError):
        series(1, 2).pointwise_mul(Polynomial.one(2))
