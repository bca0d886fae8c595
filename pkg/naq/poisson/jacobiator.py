"""
Jacobiator of a bivector, as a function of three arguments and as a tensor

The tensor entries are J^ijk = P^il d_l P^jk + P^jl d_l P^ki + P^kl d_l P^ij, and
{f, g, h} = J^ijk d_i f d_j g d_k h reproduces the nested-bracket Jacobiator.
"""
from __future__ import annotations

import logging
from itertools import combinations, permutations, product

import numpy as np

from naq.algebra.polynomial import Polynomial, unit_index
from naq.core.errors import DimensionMismatchError
from naq.poisson.bivector import Covector, bracket, bracket_series, check_dimensions

logger = logging.getLogger(__name__)


def _permutation_sign(order):
    sign = 1
    order = list(order)
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if order[i] > order[j]:
                sign = -sign
    return sign


class JacobiatorTensor:
    """Totally antisymmetric rank-3 array J^ijk of Polynomials"""

    def __init__(self, dimension, entries):
        self.dimension = dimension
        self.entries = entries
        self.entries.flags.writeable = False

    @classmethod
    def from_independent(cls, dimension, independent):
        """Fill the full array from {(i, j, k): J^ijk} with i < j < k"""
        zero = Polynomial.zero(dimension)
        entries = np.empty((dimension,) * 3, dtype=object)
        for index in product(range(dimension), repeat=3):
            entries[index] = zero
        for (i, j, k), value in independent.items():
            for perm in permutations((0, 1, 2)):
                index = tuple((i, j, k)[p] for p in perm)
                entries[index] = value if _permutation_sign(perm) > 0 else -value
        return cls(dimension, entries)

    def entry(self, i, j, k):
        return self.entries[i, j, k]

    def independent_entries(self):
        """Nonzero entries (i, j, k, J^ijk) with i < j < k"""
        return [(i, j, k, self.entries[i, j, k])
                for i, j, k in combinations(range(self.dimension), 3)
                if not self.entries[i, j, k].is_zero]

    @property
    def is_zero(self):
        return not self.independent_entries()

    def contract(self, f, g, h):
        """J^ijk d_i f d_j g d_k h"""
        n = self.dimension
        result = Polynomial.zero(n)
        for i, j, k, value in self.independent_entries():
            for perm in permutations((i, j, k)):
                a, b, c = perm
                df = f.derivative(unit_index(n, a))
                dg = g.derivative(unit_index(n, b))
                dh = h.derivative(unit_index(n, c))
                if df.is_zero or dg.is_zero or dh.is_zero:
                    continue
                result = result + self.entries[a, b, c] * df * dg * dh
        return result

    def evaluate_at(self, point):
        values = np.empty(self.entries.shape, dtype=object)
        for index in product(range(self.dimension), repeat=3):
            values[index] = self.entries[index].evaluate(point)
        return values

    def to_records(self):
        """[{"indices": [i, j, k], "expr": ...}] for the independent entries, 1-based"""
        return [{"indices": [i + 1, j + 1, k + 1], "expr": value.to_expr()}
                for i, j, k, value in self.independent_entries()]


def jacobiator_fn(P, f, g, h):
    """{f,{g,h}} + {h,{f,g}} + {g,{h,f}} by nested brackets"""
    check_dimensions(P, f, g, h)
    return (bracket(P, f, bracket(P, g, h))
            + bracket(P, h, bracket(P, f, g))
            + bracket(P, g, bracket(P, h, f)))


def jacobiator_series(P, a, b, c):
    return (bracket_series(P, a, bracket_series(P, b, c))
            + bracket_series(P, c, bracket_series(P, a, b))
            + bracket_series(P, b, bracket_series(P, c, a)))


def jacobiator_tensor(P):
    n = P.dimension
    derivatives = [[P.entries[i, j].partial(l) for l in range(n)] for i in range(n) for j in range(n)]

    def d(l, j, k):
        return derivatives[j * n + k][l]

    independent = {}
    for i, j, k in combinations(range(n), 3):
        value = Polynomial.zero(n)
        for l in range(n):
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                coefficient = P.entries[a, l]
                if coefficient.is_zero:
                    continue
                derivative = d(l, b, c)
                if not derivative.is_zero:
                    value = value + coefficient * derivative
        if not value.is_zero:
            independent[(i, j, k)] = value
    logger.debug(f"Jacobiator of {P!r} has {len(independent)} independent nonzero entries")
    return JacobiatorTensor.from_independent(n, independent)


def contract_jacobiator_at(P, x0, v1, v2, v3, tensor=None):
    """J^ijk(x0) v1_i v2_j v3_k"""
    covectors = [Covector.of(v) for v in (v1, v2, v3)]
    if len(x0) != P.dimension or any(len(v) != P.dimension for v in covectors):
        raise DimensionMismatchError(f"covectors and point must have length {P.dimension}")
    if tensor is None:
        tensor = jacobiator_tensor(P)
    values = tensor.evaluate_at(x0)
    a, b, c = (v.as_array() for v in covectors)
    return a.dot(values.dot(c).dot(b))
