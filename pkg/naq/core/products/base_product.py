"""
Base star product class for NAQ product families

A star product f * g = f.g + sum_{r=1..K} lambda^r C_r(f, g) is stored as its
corrections C_1..C_K; C_0, the pointwise product, is implicit.
"""
from __future__ import annotations

import logging
from itertools import product as cartesian

from naq.algebra.diffops import BidiffOperator
from naq.algebra.polynomial import Polynomial, index_degree, monomials_up_to
from naq.algebra.series import LambdaSeries
from naq.core.errors import DimensionMismatchError, PreconditionError
from naq.poisson.bivector import bracket

logger = logging.getLogger(__name__)


class StarProduct:
    """Truncated star product given by its bidifferential corrections"""

    family = "custom"

    def __init__(self, bivector, corrections, truncation_order, validate=True):
        """Initialize the product

        Args:
            bivector (Bivector): the bivector the first-order part must reproduce
            corrections (list): BidiffOperators C_1, C_2, ...; missing orders are zero
            truncation_order (int): K, all products are computed modulo lambda^(K+1)
            validate (bool): check the antisymmetrized C_1 against the bracket
        """
        if truncation_order < 0:
            raise PreconditionError(f"truncation order must be non-negative, got {truncation_order}")
        corrections = list(corrections)
        if len(corrections) > truncation_order:
            raise PreconditionError(
                f"{len(corrections)} corrections given for truncation order {truncation_order}")
        n = bivector.dimension
        for r, op in enumerate(corrections, start=1):
            if op.dimension != n:
                raise DimensionMismatchError(
                    f"C_{r} has dimension {op.dimension}, bivector has dimension {n}")
        corrections += [BidiffOperator.empty(n)] * (truncation_order - len(corrections))

        self.source_bivector = bivector
        self.dimension = n
        self.truncation_order = truncation_order
        self.corrections = tuple(corrections)

        if validate:
            self.validate_first_order()

    def correction(self, order):
        """C_r for 1 <= r <= K"""
        if not 1 <= order <= self.truncation_order:
            raise IndexError(f"no correction of order {order} for K = {self.truncation_order}")
        return self.corrections[order - 1]

    def correction_orders(self):
        """Per lambda-order (left order, right order, total order), None for a vanishing C_r

        Entry 0 describes the pointwise product.
        """
        orders = [(0, 0, 0)]
        for op in self.corrections:
            orders.append(None if op.is_empty else op.orders + (op.total_order,))
        return orders

    def validate_first_order(self):
        """Check that the antisymmetric part of C_1 is the Poisson bracket

        Both sides are bidifferential, so comparing them on monomial pairs up to
        their orders is conclusive. The first violating pair in graded order is
        reported.
        """
        if self.truncation_order < 1:
            return
        first = self.corrections[0].antisymmetrized()
        left, right = first.orders
        bound = max(left, right, 1)
        monomials = monomials_up_to(self.dimension, bound)
        pairs = sorted(cartesian(monomials, monomials),
                       key=lambda pair: index_degree(pair[0]) + index_degree(pair[1]))
        for gamma, delta in pairs:
            f = Polynomial.monomial(self.dimension, gamma)
            g = Polynomial.monomial(self.dimension, delta)
            expected = bracket(self.source_bivector, f, g)
            actual = first.apply(f, g)
            if actual != expected:
                raise PreconditionError(
                    f"antisymmetrized C_1 differs from the Poisson bracket on "
                    f"({f.to_expr()}, {g.to_expr()}): {actual.to_expr()} vs {expected.to_expr()}",
                    witness=(f, g))

    def lift(self, value):
        return LambdaSeries.lift(value, self.dimension, self.truncation_order)

    def star(self, f, g):
        """(f * g)_t = sum_{r+s+u=t} C_r(f_s, g_u) modulo lambda^(K+1)"""
        f, g = self.lift(f), self.lift(g)
        K = self.truncation_order
        result = [Polynomial.zero(self.dimension)] * (K + 1)
        for s, a in enumerate(f.coefficients):
            if a.is_zero:
                continue
            for u in range(K + 1 - s):
                b = g.coefficients[u]
                if b.is_zero:
                    continue
                result[s + u] = result[s + u] + a * b
                for r in range(1, K + 1 - s - u):
                    op = self.corrections[r - 1]
                    if not op.is_empty:
                        result[s + u + r] = result[s + u + r] + op.apply(a, b)
        return LambdaSeries(result)

    def to_dict(self):
        from naq.utils.serialization import product_to_records
        return {
            "family": self.family,
            "truncation_order": self.truncation_order,
            "corrections": product_to_records(self),
        }

    def __eq__(self, other):
        if not isinstance(other, StarProduct):
            return NotImplemented
        return (self.truncation_order == other.truncation_order
                and self.source_bivector == other.source_bivector
                and self.corrections == other.corrections)

    def __hash__(self):
        return hash((self.truncation_order, self.corrections))

    def __repr__(self):
        return (f"{type(self).__name__}(dimension={self.dimension}, "
                f"truncation_order={self.truncation_order})")


def star(S, f, g):
    return S.star(f, g)


def commutator(S, f, g):
    """[f, g] = f * g - g * f"""
    return S.star(f, g) - S.star(g, f)


def jordan(S, f, g):
    """Symmetrized product f * g + g * f"""
    return S.star(f, g) + S.star(g, f)


def associator(S, f, g, h):
    """A(f, g, h) = f * (g * h) - (f * g) * h"""
    return S.star(f, S.star(g, h)) - S.star(S.star(f, g), h)


def star_power(S, f, k, association="left"):
    """k-fold star product of f, associated to the left or to the right"""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"star power needs a positive integer exponent, got {k!r}")
    if association not in ("left", "right"):
        raise ValueError(f"association must be 'left' or 'right', got {association!r}")
    f = S.lift(f)
    result = f
    for _ in range(k - 1):
        result = S.star(result, f) if association == "left" else S.star(f, result)
    return result


def unitality_check(S, **options):
    """1 * f = f * 1 = f on the monomial certificate of every correction"""
    from naq.identities.checks import check_unitality
    return check_unitality(S, **options)
