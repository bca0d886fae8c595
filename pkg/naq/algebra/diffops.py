"""
Differential and bidifferential operators in expanded normal form

A BidiffOperator is a finite sum of terms c(x) d^alpha (x) d^beta with one term
per (alpha, beta) pair; a DiffOperator is the single-slot analogue used for gauge
layers. Both can be recovered from a purely functional description by
interpolating their action on monomials.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from naq.algebra.polynomial import (Polynomial, falling_factor, index_degree,
                                    index_factorial, monomials_up_to)
from naq.core.errors import DimensionMismatchError

logger = logging.getLogger(__name__)


def _term_key(alpha, beta=()):
    return (index_degree(alpha) + index_degree(beta), alpha, beta)


@dataclass(frozen=True)
class BidiffTerm:
    """One term c(x) d^alpha f d^beta g of a bidifferential operator"""
    coefficient: Polynomial
    left_index: tuple
    right_index: tuple

    def __post_init__(self):
        n = self.coefficient.dimension
        if len(self.left_index) != n or len(self.right_index) != n:
            raise DimensionMismatchError(
                f"multi-indices {self.left_index}, {self.right_index} do not match dimension {n}")
        if self.coefficient.is_zero:
            raise ValueError("bidifferential terms must have a nonzero coefficient")


class BidiffOperator:
    """Sum of BidiffTerms with distinct (alpha, beta) pairs"""

    __slots__ = ("dimension", "terms")

    def __init__(self, dimension, terms=()):
        self.dimension = dimension
        merged = {}
        for term in terms:
            if term.coefficient.dimension != dimension:
                raise DimensionMismatchError(
                    f"term of dimension {term.coefficient.dimension} in operator of dimension {dimension}")
            key = (term.left_index, term.right_index)
            merged[key] = merged[key] + term.coefficient if key in merged else term.coefficient
        self.terms = tuple(
            BidiffTerm(coeff, alpha, beta)
            for (alpha, beta), coeff in sorted(merged.items(), key=lambda kv: _term_key(*kv[0]))
            if not coeff.is_zero)

    @classmethod
    def from_mapping(cls, dimension, mapping):
        """Build from {(alpha, beta): coefficient}; coefficients may be rationals"""
        terms = []
        for (alpha, beta), coeff in mapping.items():
            if not isinstance(coeff, Polynomial):
                coeff = Polynomial.constant(dimension, coeff)
            if not coeff.is_zero:
                terms.append(BidiffTerm(coeff, tuple(alpha), tuple(beta)))
        return cls(dimension, terms)

    @classmethod
    def empty(cls, dimension):
        return cls(dimension)

    @classmethod
    def interpolate(cls, dimension, action, left_order, right_order):
        """Recover the normal form of an operator known through its action on monomials

        ``action(gamma, delta)`` must return the Polynomial B(x^gamma, x^delta) of a
        bidifferential operator whose terms have |alpha| <= left_order and
        |beta| <= right_order. Coefficients are found by a triangular solve in
        increasing |gamma| + |delta|.
        """
        pairs = sorted(product(monomials_up_to(dimension, left_order),
                               monomials_up_to(dimension, right_order)),
                       key=lambda pair: index_degree(pair[0]) + index_degree(pair[1]))
        found = {}
        for gamma, delta in pairs:
            residual = action(gamma, delta)
            for (alpha, beta), coeff in found.items():
                left = falling_factor(gamma, alpha)
                right = falling_factor(delta, beta) if left else 0
                if left and right:
                    shifted = tuple(g - a + d - b for g, a, d, b in zip(gamma, alpha, delta, beta))
                    residual = residual - coeff * Polynomial.monomial(dimension, shifted, left * right)
            if not residual.is_zero:
                found[(gamma, delta)] = residual.scale(
                    Fraction(1, index_factorial(gamma) * index_factorial(delta)))
        logger.debug(f"Interpolated bidifferential operator with {len(found)} terms "
                     f"from {len(pairs)} monomial pairs")
        return cls.from_mapping(dimension, found)

    def mapping(self):
        return {(t.left_index, t.right_index): t.coefficient for t in self.terms}

    @property
    def is_empty(self):
        return not self.terms

    @property
    def orders(self):
        """(max |alpha|, max |beta|), (0, 0) for the empty operator"""
        if not self.terms:
            return (0, 0)
        return (max(index_degree(t.left_index) for t in self.terms),
                max(index_degree(t.right_index) for t in self.terms))

    @property
    def total_order(self):
        if not self.terms:
            return 0
        return max(index_degree(t.left_index) + index_degree(t.right_index) for t in self.terms)

    def apply(self, f, g):
        if f.dimension != self.dimension or g.dimension != self.dimension:
            raise DimensionMismatchError(
                f"operator of dimension {self.dimension} applied to dimensions {f.dimension}, {g.dimension}")
        result = Polynomial.zero(self.dimension)
        if f.is_zero or g.is_zero:
            return result
        for term in self.terms:
            df = f.derivative(term.left_index)
            if df.is_zero:
                continue
            dg = g.derivative(term.right_index)
            if dg.is_zero:
                continue
            result = result + term.coefficient * df * dg
        return result

    __call__ = apply

    def swapped(self):
        """The operator (f, g) -> B(g, f)"""
        return BidiffOperator(self.dimension, (
            BidiffTerm(t.coefficient, t.right_index, t.left_index) for t in self.terms))

    def antisymmetrized(self):
        half = Fraction(1, 2)
        return (self - self.swapped()).scale(half)

    def scale(self, factor):
        return BidiffOperator(self.dimension, (
            BidiffTerm(t.coefficient.scale(factor), t.left_index, t.right_index)
            for t in self.terms if factor))

    def __add__(self, other):
        if not isinstance(other, BidiffOperator):
            return NotImplemented
        if other.dimension != self.dimension:
            raise DimensionMismatchError(
                f"dimension mismatch: {self.dimension} vs {other.dimension}")
        return BidiffOperator(self.dimension, self.terms + other.terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, BidiffOperator):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, BidiffOperator):
            return NotImplemented
        return self.dimension == other.dimension and self.terms == other.terms

    def __hash__(self):
        return hash((self.dimension, self.terms))

    def __repr__(self):
        return f"BidiffOperator(dimension={self.dimension}, terms={len(self.terms)})"


def bidiff_apply(op, f, g):
    return op.apply(f, g)


def bidiff_orders(op):
    return op.orders


def bidiff_total_order(op):
    return op.total_order


def bidiff_antisymmetrize(op):
    return op.antisymmetrized()


class DiffOperator:
    """Single-slot differential operator sum c(x) d^alpha in normal form"""

    __slots__ = ("dimension", "terms")

    def __init__(self, dimension, mapping=None):
        self.dimension = dimension
        cleaned = {}
        for alpha, coeff in (mapping or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != dimension:
                raise DimensionMismatchError(
                    f"multi-index {alpha} does not match dimension {dimension}")
            if not isinstance(coeff, Polynomial):
                coeff = Polynomial.constant(dimension, coeff)
            if coeff.dimension != dimension:
                raise DimensionMismatchError(
                    f"coefficient of dimension {coeff.dimension} in operator of dimension {dimension}")
            cleaned[alpha] = cleaned[alpha] + coeff if alpha in cleaned else coeff
        self.terms = tuple((alpha, coeff)
                           for alpha, coeff in sorted(cleaned.items(), key=lambda kv: _term_key(kv[0]))
                           if not coeff.is_zero)

    @classmethod
    def interpolate(cls, dimension, action, order):
        """Recover a differential operator of order <= ``order`` from its action on monomials"""
        found = {}
        for gamma in monomials_up_to(dimension, order):
            residual = action(gamma)
            for alpha, coeff in found.items():
                factor = falling_factor(gamma, alpha)
                if factor:
                    shifted = tuple(g - a for g, a in zip(gamma, alpha))
                    residual = residual - coeff * Polynomial.monomial(dimension, shifted, factor)
            if not residual.is_zero:
                found[gamma] = residual.scale(Fraction(1, index_factorial(gamma)))
        return cls(dimension, found)

    def mapping(self):
        return dict(self.terms)

    @property
    def is_empty(self):
        return not self.terms

    @property
    def order(self):
        if not self.terms:
            return 0
        return max(index_degree(alpha) for alpha, _ in self.terms)

    def apply(self, f):
        if f.dimension != self.dimension:
            raise DimensionMismatchError(
                f"operator of dimension {self.dimension} applied to dimension {f.dimension}")
        result = Polynomial.zero(self.dimension)
        for alpha, coeff in self.terms:
            df = f.derivative(alpha)
            if not df.is_zero:
                result = result + coeff * df
        return result

    __call__ = apply

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.dimension == other.dimension and self.terms == other.terms

    def __hash__(self):
        return hash((self.dimension, self.terms))

    def __repr__(self):
        return f"DiffOperator(dimension={self.dimension}, terms={len(self.terms)})"
