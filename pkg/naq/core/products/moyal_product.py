"""
Moyal product for a constant bivector
"""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from math import factorial

from naq.algebra.diffops import BidiffOperator
from naq.algebra.polynomial import add_indices, unit_index, zero_index
from naq.core.errors import PreconditionError
from naq.core.products.base_product import StarProduct

logger = logging.getLogger(__name__)


def moyal_correction(bivector, order):
    """C_r(f, g) = 1/r! P^i1j1 ... P^irjr d_i1..ir f d_j1..jr g in normal form"""
    n = bivector.dimension
    entries = [(i, j, bivector.entries[i, j].constant_value())
               for i in range(n) for j in range(n) if not bivector.entries[i, j].is_zero]
    weight = Fraction(1, factorial(order))
    mapping = {}
    for sequence in product(entries, repeat=order):
        alpha, beta, coefficient = zero_index(n), zero_index(n), weight
        for i, j, value in sequence:
            alpha = add_indices(alpha, unit_index(n, i))
            beta = add_indices(beta, unit_index(n, j))
            coefficient *= value
        mapping[(alpha, beta)] = mapping.get((alpha, beta), Fraction(0)) + coefficient
    return BidiffOperator.from_mapping(n, mapping)


class MoyalProduct(StarProduct):
    """Associative reference product of a constant bivector"""

    family = "moyal"

    def __init__(self, bivector, truncation_order):
        if not bivector.is_constant:
            raise PreconditionError(
                f"Moyal product needs a constant bivector, {bivector.name} bivector is not constant")
        corrections = [moyal_correction(bivector, r) for r in range(1, truncation_order + 1)]
        logger.debug(f"Built Moyal corrections up to order {truncation_order}")
        super().__init__(bivector, corrections, truncation_order)


def make_moyal(P, K):
    return MoyalProduct(P, K)
