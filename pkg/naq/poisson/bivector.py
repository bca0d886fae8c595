"""
Bivector fields and the Poisson bracket they define

P is stored as an n x n numpy object array of Polynomials and must be
antisymmetric. The bracket {f, g} = sum_ij P^ij d_i f d_j g is evaluated through
the equivalent first-order bidifferential operator.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from naq.algebra.diffops import BidiffOperator, BidiffTerm
from naq.algebra.polynomial import Polynomial, to_fraction, unit_index
from naq.algebra.series import LambdaSeries
from naq.core.errors import DimensionMismatchError, PreconditionError

logger = logging.getLogger(__name__)


class Bivector:
    """Antisymmetric matrix of polynomial entries P^ij"""

    def __init__(self, entries, name="custom"):
        rows = [list(row) for row in entries]
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DimensionMismatchError("bivector entries must form a non-empty square matrix")
        matrix = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                entry = rows[i][j]
                if not isinstance(entry, Polynomial):
                    entry = Polynomial.constant(n, entry)
                if entry.dimension != n:
                    raise DimensionMismatchError(
                        f"entry P^{i + 1}{j + 1} has dimension {entry.dimension}, expected {n}")
                matrix[i, j] = entry
        for i in range(n):
            for j in range(i, n):
                if matrix[i, j] != -matrix[j, i]:
                    raise PreconditionError(
                        f"bivector is not antisymmetric at ({i + 1}, {j + 1}): "
                        f"{matrix[i, j].to_expr()} vs {matrix[j, i].to_expr()}")
        matrix.flags.writeable = False
        self.dimension = n
        self.entries = matrix
        self.name = name
        self._operator = None

    @classmethod
    def from_upper(cls, dimension, upper, name="custom"):
        """Build from {(i, j): P^ij} with 0-based i < j; the lower half follows by antisymmetry"""
        zero = Polynomial.zero(dimension)
        rows = [[zero] * dimension for _ in range(dimension)]
        for (i, j), value in upper.items():
            if not isinstance(value, Polynomial):
                value = Polynomial.constant(dimension, value)
            if i == j:
                if not value.is_zero:
                    raise PreconditionError(f"diagonal entry P^{i + 1}{i + 1} must vanish")
                continue
            rows[i][j] = value
            rows[j][i] = -value
        return cls(rows, name=name)

    def entry(self, i, j):
        return self.entries[i, j]

    def upper_entries(self):
        """Nonzero entries (i, j, P^ij) with i < j"""
        n = self.dimension
        return [(i, j, self.entries[i, j]) for i in range(n) for j in range(i + 1, n)
                if not self.entries[i, j].is_zero]

    @property
    def is_zero(self):
        return not self.upper_entries()

    @property
    def is_constant(self):
        return all(self.entries[i, j].is_constant
                   for i in range(self.dimension) for j in range(self.dimension))

    @property
    def bracket_operator(self):
        """The first-order operator sum_ij P^ij d_i (x) d_j"""
        if self._operator is None:
            n = self.dimension
            terms = [BidiffTerm(self.entries[i, j], unit_index(n, i), unit_index(n, j))
                     for i in range(n) for j in range(n) if not self.entries[i, j].is_zero]
            self._operator = BidiffOperator(n, terms)
        return self._operator

    def evaluate_at(self, point):
        """Numeric matrix P(x0) with Fraction entries"""
        n = self.dimension
        values = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                values[i, j] = self.entries[i, j].evaluate(point)
        return values

    def to_exprs(self):
        return [[self.entries[i, j].to_expr() for j in range(self.dimension)]
                for i in range(self.dimension)]

    def __eq__(self, other):
        if not isinstance(other, Bivector):
            return NotImplemented
        return (self.dimension == other.dimension
                and all(self.entries[i, j] == other.entries[i, j]
                        for i in range(self.dimension) for j in range(self.dimension)))

    def __hash__(self):
        return hash((self.dimension, tuple(self.entries.flat)))

    def __repr__(self):
        return f"Bivector(name={self.name!r}, dimension={self.dimension})"


@dataclass(frozen=True)
class Covector:
    """Rational cotangent vector at a point"""
    components: tuple

    @classmethod
    def of(cls, values):
        if isinstance(values, Covector):
            return values
        return cls(tuple(to_fraction(v) for v in values))

    @classmethod
    def basis(cls, dimension, axis):
        return cls(tuple(Fraction(1 if k == axis else 0) for k in range(dimension)))

    def __len__(self):
        return len(self.components)

    def as_array(self):
        return np.array(self.components, dtype=object)


def check_dimensions(P, *polynomials):
    for p in polynomials:
        if p.dimension != P.dimension:
            raise DimensionMismatchError(
                f"argument of dimension {p.dimension} for a bivector of dimension {P.dimension}")


def bracket(P, f, g):
    """Poisson bracket {f, g} = P^ij d_i f d_j g"""
    check_dimensions(P, f, g)
    return P.bracket_operator.apply(f, g)


def bracket_series(P, a, b):
    """Bracket extended lambda-bilinearly to truncated series"""
    a._check(b)
    K = a.truncation_order
    zero = Polynomial.zero(a.dimension)
    result = [zero] * (K + 1)
    for s, left in enumerate(a.coefficients):
        if left.is_zero:
            continue
        for u in range(K + 1 - s):
            right = b.coefficients[u]
            if not right.is_zero:
                result[s + u] = result[s + u] + bracket(P, left, right)
    return LambdaSeries(result)


def contract_bivector_at(P, x0, v1, v4):
    """P^ij(x0) v1_i v4_j"""
    v1, v4 = Covector.of(v1), Covector.of(v4)
    if len(v1) != P.dimension or len(v4) != P.dimension or len(x0) != P.dimension:
        raise DimensionMismatchError(f"covectors and point must have length {P.dimension}")
    return v1.as_array().dot(P.evaluate_at(x0)).dot(v4.as_array())
