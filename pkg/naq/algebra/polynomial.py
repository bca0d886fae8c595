"""
Exact multivariate polynomials over the rationals for NAQ

Polynomials stand in for the smooth functions of the ambient space. They wrap
sparse elements of the sympy ring QQ[x1..xn]; multi-indices are plain tuples
of non-negative integers whose length is the ambient dimension, and axes are
0-based (axis i is the variable x{i+1}).
"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from naq.core.errors import DimensionMismatchError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def polynomial_ring(dimension):
    """Return the ring QQ[x1..xn] shared by all polynomials of one dimension"""
    if dimension < 1:
        raise ValueError(f"dimension must be positive, got {dimension}")
    names = ",".join(f"x{i}" for i in range(1, dimension + 1))
    return ring(names, QQ)[0]


def to_fraction(value):
    """Convert an int, str, Fraction or ground-domain rational to a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


def to_ground(value):
    """Convert a rational into the coefficient domain of the polynomial rings"""
    value = to_fraction(value)
    return QQ(value.numerator, value.denominator)


# Multi-index helpers

def zero_index(dimension):
    return (0,) * dimension


def unit_index(dimension, axis):
    """Multi-index of the first-order derivative along ``axis``"""
    if not 0 <= axis < dimension:
        raise IndexError(f"axis {axis} out of range for dimension {dimension}")
    exponents = [0] * dimension
    exponents[axis] = 1
    return tuple(exponents)


def add_indices(alpha, beta):
    return tuple(a + b for a, b in zip(alpha, beta))


def index_degree(alpha):
    """|alpha|, the total order of a multi-index"""
    return sum(alpha)


def index_factorial(alpha):
    result = 1
    for a in alpha:
        result *= factorial(a)
    return result


def falling_factor(gamma, alpha):
    """Coefficient of x^(gamma - alpha) in the derivative d^alpha x^gamma (0 if it vanishes)"""
    result = 1
    for g, a in zip(gamma, alpha):
        if a > g:
            return 0
        for step in range(a):
            result *= g - step
    return result


def monomials_of_degree(dimension, degree):
    """Exponent tuples of one total degree, x1^degree first"""
    if dimension == 1:
        return [(degree,)]
    result = []
    for head in range(degree, -1, -1):
        for tail in monomials_of_degree(dimension - 1, degree - head):
            result.append((head,) + tail)
    return result


@lru_cache(maxsize=256)
def monomials_up_to(dimension, degree):
    """All exponent tuples of total degree <= ``degree`` in graded-lex order

    The constant monomial comes first, then degree one (x1, x2, ...), and so on.
    This is the order every witness search enumerates arguments in.
    """
    result = []
    for d in range(degree + 1):
        result.extend(monomials_of_degree(dimension, d))
    return tuple(result)


class Polynomial:
    """Immutable exact polynomial in x1..xn with rational coefficients"""

    __slots__ = ("dimension", "_element", "_hash", "_derivatives")

    def __init__(self, dimension, element=None):
        self.dimension = dimension
        self._element = polynomial_ring(dimension).zero if element is None else element
        self._hash = None
        self._derivatives = {}

    # Construction

    @classmethod
    def zero(cls, dimension):
        return cls(dimension)

    @classmethod
    def one(cls, dimension):
        return cls.constant(dimension, 1)

    @classmethod
    def constant(cls, dimension, value):
        return cls.from_terms(dimension, {zero_index(dimension): value})

    @classmethod
    def variable(cls, dimension, axis):
        return cls.from_terms(dimension, {unit_index(dimension, axis): 1})

    @classmethod
    def monomial(cls, dimension, exponents, coefficient=1):
        return cls.from_terms(dimension, {tuple(exponents): coefficient})

    @classmethod
    def from_terms(cls, dimension, terms):
        """Build a polynomial from a mapping (or pairs) multi-index -> rational

        Like terms are merged and zero coefficients dropped.
        """
        items = terms.items() if hasattr(terms, "items") else terms
        merged = {}
        for exponents, coefficient in items:
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != dimension:
                raise DimensionMismatchError(
                    f"multi-index {exponents} does not match dimension {dimension}")
            if any(e < 0 for e in exponents):
                raise ValueError(f"negative exponent in multi-index {exponents}")
            merged[exponents] = merged.get(exponents, Fraction(0)) + to_fraction(coefficient)
        ground = {e: to_ground(c) for e, c in merged.items() if c}
        return cls(dimension, polynomial_ring(dimension).from_dict(ground))

    def _wrap(self, element):
        return Polynomial(self.dimension, element)

    # Inspection

    def terms(self):
        """Mapping multi-index -> Fraction, highest graded-lex term first"""
        ordered = sorted(self._element.items(),
                         key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))
        return {exponents: to_fraction(c) for exponents, c in ordered}

    def coefficient(self, exponents):
        value = self._element.get(tuple(exponents))
        return Fraction(0) if value is None else to_fraction(value)

    @property
    def is_zero(self):
        return not self._element

    @property
    def is_constant(self):
        zero = zero_index(self.dimension)
        return all(exponents == zero for exponents in self._element)

    def constant_value(self):
        """Return the value of a constant polynomial as a Fraction"""
        if not self.is_constant:
            raise ValueError(f"{self.to_expr()} is not constant")
        return self.coefficient(zero_index(self.dimension))

    @property
    def degree(self):
        """Total degree; the zero polynomial reports -1"""
        if not self._element:
            return -1
        return max(sum(exponents) for exponents in self._element)

    def __len__(self):
        return len(self._element)

    def __bool__(self):
        return bool(self._element)

    # Arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.dimension != self.dimension:
                raise DimensionMismatchError(
                    f"dimension mismatch: {self.dimension} vs {other.dimension}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.dimension, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap(self._element + other._element)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap(self._element - other._element)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return self._wrap(-self._element)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            other = self._coerce(other)
            return self._wrap(self._element * other._element)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor):
        factor = to_fraction(factor)
        if not factor:
            return Polynomial.zero(self.dimension)
        return self._wrap(self._element.mul_ground(to_ground(factor)))

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exponent!r}")
        return self._wrap(self._element ** exponent)

    def partial(self, axis):
        """Formal partial derivative along a 0-based axis"""
        return self.derivative(unit_index(self.dimension, axis))

    def derivative(self, alpha):
        """Mixed partial derivative d^alpha; results are cached per multi-index"""
        alpha = tuple(alpha)
        cached = self._derivatives.get(alpha)
        if cached is not None:
            return cached
        if len(alpha) != self.dimension:
            raise DimensionMismatchError(
                f"multi-index {alpha} does not match dimension {self.dimension}")
        if not any(alpha):
            result = self
        else:
            terms = []
            for exponents, coeff in self._element.items():
                factor = falling_factor(exponents, alpha)
                if factor:
                    shifted = tuple(e - a for e, a in zip(exponents, alpha))
                    terms.append((shifted, coeff * factor))
            result = self._wrap(self._element.new(terms))
        self._derivatives[alpha] = result
        return result

    def evaluate(self, point):
        """Exact value at a rational point"""
        point = [to_fraction(v) for v in point]
        if len(point) != self.dimension:
            raise DimensionMismatchError(
                f"point of length {len(point)} for dimension {self.dimension}")
        total = Fraction(0)
        for exponents, coeff in self._element.items():
            value = to_fraction(coeff)
            for base, exponent in zip(point, exponents):
                if exponent:
                    value *= base ** exponent
            total += value
        return total

    # Comparison and rendering

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.dimension, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.dimension == other.dimension and self._element == other._element

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dimension, frozenset(self._element.items())))
        return self._hash

    def to_expr(self):
        """Render in the input grammar, e.g. ``x1*x2 - 1/2*x3^2``"""
        terms = self.terms()
        if not terms:
            return "0"
        pieces = []
        for exponents, coeff in terms.items():
            factors = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                       for i, e in enumerate(exponents) if e]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def __str__(self):
        return self.to_expr()

    def __repr__(self):
        return f"Polynomial({self.to_expr()!r}, dimension={self.dimension})"


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def poly_partial(a, i):
    """Partial derivative along x_i, with i counted from 1 as in the rendered names"""
    if not 1 <= i <= a.dimension:
        raise IndexError(f"variable index {i} outside 1..{a.dimension}")
    return a.partial(i - 1)


def poly_eval(a, point):
    return a.evaluate(point)
