"""
Truncated formal power series in the deformation parameter lambda

A LambdaSeries holds the coefficients f_0..f_K of f_0 + lambda f_1 + ... +
lambda^K f_K. Everything of order above K is discarded; two series can only be
combined when they share the ambient dimension and the truncation order.
"""
from __future__ import annotations

import logging
from fractions import Fraction

from naq.algebra.polynomial import Polynomial, to_fraction
from naq.core.errors import DimensionMismatchError, TruncationMismatchError

logger = logging.getLogger(__name__)


class LambdaSeries:
    """Immutable series sum_{r<=K} lambda^r f_r with polynomial coefficients"""

    __slots__ = ("dimension", "truncation_order", "coefficients", "_hash")

    def __init__(self, coefficients):
        coefficients = tuple(coefficients)
        if not coefficients:
            raise ValueError("a series needs at least the lambda^0 coefficient")
        dimensions = {c.dimension for c in coefficients}
        if len(dimensions) != 1:
            raise DimensionMismatchError(
                f"series coefficients mix dimensions {sorted(dimensions)}")
        self.dimension = dimensions.pop()
        self.truncation_order = len(coefficients) - 1
        self.coefficients = coefficients
        self._hash = None

    @classmethod
    def zero(cls, dimension, truncation_order):
        zero = Polynomial.zero(dimension)
        return cls([zero] * (truncation_order + 1))

    @classmethod
    def from_polynomial(cls, polynomial, truncation_order, lambda_order=0):
        """Series lambda^lambda_order * polynomial, zero if that order is truncated"""
        zero = Polynomial.zero(polynomial.dimension)
        coefficients = [zero] * (truncation_order + 1)
        if lambda_order <= truncation_order:
            coefficients[lambda_order] = polynomial
        return cls(coefficients)

    constant = from_polynomial

    @classmethod
    def lam(cls, dimension, truncation_order):
        """The series lambda itself (zero when K = 0)"""
        return cls.from_polynomial(Polynomial.one(dimension), truncation_order, 1)

    @classmethod
    def lift(cls, value, dimension, truncation_order):
        """Coerce a polynomial, rational or series into a series of the given shape"""
        if isinstance(value, LambdaSeries):
            if value.dimension != dimension:
                raise DimensionMismatchError(
                    f"series of dimension {value.dimension}, expected {dimension}")
            if value.truncation_order != truncation_order:
                raise TruncationMismatchError(
                    f"series truncated at {value.truncation_order}, expected {truncation_order}")
            return value
        if isinstance(value, Polynomial):
            if value.dimension != dimension:
                raise DimensionMismatchError(
                    f"polynomial of dimension {value.dimension}, expected {dimension}")
            return cls.from_polynomial(value, truncation_order)
        return cls.from_polynomial(Polynomial.constant(dimension, value), truncation_order)

    def coefficient(self, order):
        if 0 <= order <= self.truncation_order:
            return self.coefficients[order]
        return Polynomial.zero(self.dimension)

    def __getitem__(self, order):
        return self.coefficients[order]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    @property
    def is_zero(self):
        return all(c.is_zero for c in self.coefficients)

    def lowest_order(self):
        """Return (r, f_r) for the first non-vanishing coefficient, None for zero"""
        for order, coefficient in enumerate(self.coefficients):
            if not coefficient.is_zero:
                return order, coefficient
        return None

    def _check(self, other):
        if not isinstance(other, LambdaSeries):
            return False
        if other.dimension != self.dimension:
            raise DimensionMismatchError(
                f"dimension mismatch: {self.dimension} vs {other.dimension}")
        if other.truncation_order != self.truncation_order:
            raise TruncationMismatchError(
                f"truncation mismatch: {self.truncation_order} vs {other.truncation_order}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return LambdaSeries(a + b for a, b in zip(self.coefficients, other.coefficients))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return LambdaSeries(a - b for a, b in zip(self.coefficients, other.coefficients))

    def __neg__(self):
        return LambdaSeries(-c for c in self.coefficients)

    def __mul__(self, factor):
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor):
        factor = to_fraction(factor)
        return LambdaSeries(c.scale(factor) for c in self.coefficients)

    def shift(self, orders):
        """Multiply by lambda^orders, truncating whatever falls above K"""
        zero = Polynomial.zero(self.dimension)
        shifted = [zero] * orders + list(self.coefficients)
        return LambdaSeries(shifted[:self.truncation_order + 1])

    def pointwise_mul(self, other):
        """Cauchy product of the coefficient sequences, truncated at K"""
        if not self._check(other):
            raise TypeError(f"cannot multiply a series by {type(other).__name__}")
        zero = Polynomial.zero(self.dimension)
        result = [zero] * (self.truncation_order + 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coefficients[:self.truncation_order + 1 - i]):
                if not b.is_zero:
                    result[i + j] = result[i + j] + a * b
        return LambdaSeries(result)

    def __eq__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return (self.dimension == other.dimension
                and self.coefficients == other.coefficients)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coefficients)
        return self._hash

    def to_exprs(self):
        return [c.to_expr() for c in self.coefficients]

    def __repr__(self):
        return f"LambdaSeries({self.to_exprs()!r})"


def series_add(a, b):
    return a + b


def series_pointwise_mul(a, b):
    return a.pointwise_mul(b)


def series_lowest_order(a):
    return a.lowest_order()
