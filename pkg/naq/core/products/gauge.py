"""
Gauge transformations D = 1 + sum_r lambda^r D_r of star products

The transformed product is f *' g = D^-1((Df) * (Dg)). Nothing is composed
symbolically: D^-1 and the new corrections are recovered in normal form by
interpolating their action on monomials up to structural order bounds.
"""
from __future__ import annotations

import logging

from naq.algebra.diffops import BidiffOperator, DiffOperator
from naq.algebra.polynomial import Polynomial
from naq.algebra.series import LambdaSeries
from naq.core.errors import DimensionMismatchError, PreconditionError, TruncationMismatchError
from naq.core.products.base_product import StarProduct

logger = logging.getLogger(__name__)


class GaugeTransform:
    """Formal differential operator 1 + lambda D_1 + ... + lambda^K D_K"""

    def __init__(self, dimension, layers, truncation_order):
        layers = list(layers)
        if len(layers) > truncation_order:
            raise PreconditionError(
                f"{len(layers)} gauge layers given for truncation order {truncation_order}")
        for r, layer in enumerate(layers, start=1):
            if layer.dimension != dimension:
                raise DimensionMismatchError(
                    f"gauge layer D_{r} has dimension {layer.dimension}, expected {dimension}")
        layers += [DiffOperator(dimension)] * (truncation_order - len(layers))
        self.dimension = dimension
        self.truncation_order = truncation_order
        self.layers = tuple(layers)

    @classmethod
    def identity(cls, dimension, truncation_order):
        return cls(dimension, [], truncation_order)

    def layer(self, order):
        return self.layers[order - 1]

    def layer_orders(self):
        """Order of D_r for r = 0..K, with D_0 the identity; None for a vanishing layer"""
        return [0] + [None if layer.is_empty else layer.order for layer in self.layers]

    @property
    def is_identity(self):
        return all(layer.is_empty for layer in self.layers)

    def apply(self, series):
        """(Df)_t = f_t + sum_{a>=1} D_a(f_(t-a))"""
        if series.dimension != self.dimension:
            raise DimensionMismatchError(
                f"series of dimension {series.dimension} for a gauge of dimension {self.dimension}")
        if series.truncation_order != self.truncation_order:
            raise TruncationMismatchError(
                f"series truncated at {series.truncation_order}, gauge at {self.truncation_order}")
        result = list(series.coefficients)
        for a, layer in enumerate(self.layers, start=1):
            if layer.is_empty:
                continue
            for t in range(a, self.truncation_order + 1):
                source = series.coefficients[t - a]
                if not source.is_zero:
                    result[t] = result[t] + layer.apply(source)
        return LambdaSeries(result)

    __call__ = apply

    def inverse(self):
        """Materialize D^-1 = 1 + sum lambda^r E_r with E_r = -D_r - sum_s D_s E_(r-s)"""
        n = self.dimension
        inverse_layers = []
        orders = []
        for r in range(1, self.truncation_order + 1):
            bound = 0 if self.layers[r - 1].is_empty else self.layers[r - 1].order
            for s in range(1, r):
                if not self.layers[s - 1].is_empty and not inverse_layers[r - s - 1].is_empty:
                    bound = max(bound, self.layers[s - 1].order + orders[r - s - 1])

            def action(gamma, r=r):
                x = Polynomial.monomial(n, gamma)
                value = -self.layers[r - 1].apply(x)
                for s in range(1, r):
                    value = value - self.layers[s - 1].apply(inverse_layers[r - s - 1].apply(x))
                return value

            layer = DiffOperator.interpolate(n, action, bound)
            inverse_layers.append(layer)
            orders.append(layer.order)
        return GaugeTransform(n, inverse_layers, self.truncation_order)

    def __eq__(self, other):
        if not isinstance(other, GaugeTransform):
            return NotImplemented
        return self.truncation_order == other.truncation_order and self.layers == other.layers

    def __hash__(self):
        return hash((self.truncation_order, self.layers))


class GaugeTransformedProduct(StarProduct):
    """Product obtained from another one by a gauge transformation"""

    family = "gauge"


def _correction_bounds(S, D, Dinv):
    """Structural (left, right) order bounds of every C'_t"""
    K = S.truncation_order
    product_orders = S.correction_orders()
    gauge_orders = D.layer_orders()
    inverse_orders = Dinv.layer_orders()
    bounds = []
    for t in range(K + 1):
        left = right = 0
        for a in range(t + 1):
            if inverse_orders[a] is None:
                continue
            for r in range(t + 1 - a):
                if product_orders[r] is None:
                    continue
                p, q, _ = product_orders[r]
                for b in range(t + 1 - a - r):
                    if gauge_orders[b] is None:
                        continue
                    c = t - a - r - b
                    if gauge_orders[c] is None:
                        continue
                    left = max(left, inverse_orders[a] + p + gauge_orders[b])
                    right = max(right, inverse_orders[a] + q + gauge_orders[c])
        bounds.append((left, right))
    return bounds


def gauge_transform(S, D):
    """Return the product f *' g = D^-1((Df) * (Dg)) in normal form

    Args:
        S (StarProduct): the product to transform
        D (GaugeTransform): gauge of the same dimension and truncation order

    Returns:
        StarProduct: the transformed product, sharing the source bivector of S
    """
    if D.dimension != S.dimension:
        raise DimensionMismatchError(
            f"gauge of dimension {D.dimension} for a product of dimension {S.dimension}")
    if D.truncation_order != S.truncation_order:
        raise TruncationMismatchError(
            f"gauge truncated at {D.truncation_order}, product at {S.truncation_order}")
    if D.is_identity:
        return S

    n, K = S.dimension, S.truncation_order
    Dinv = D.inverse()
    bounds = _correction_bounds(S, D, Dinv)
    cache = {}

    def transformed(gamma, delta):
        key = (gamma, delta)
        if key not in cache:
            f = LambdaSeries.constant(Polynomial.monomial(n, gamma), K)
            g = LambdaSeries.constant(Polynomial.monomial(n, delta), K)
            cache[key] = Dinv.apply(S.star(D.apply(f), D.apply(g)))
        return cache[key]

    corrections = []
    for t in range(1, K + 1):
        left, right = bounds[t]
        corrections.append(BidiffOperator.interpolate(
            n, lambda gamma, delta, t=t: transformed(gamma, delta).coefficient(t), left, right))
    logger.info(f"Gauge transformed product with correction order bounds {bounds[1:]}")
    return GaugeTransformedProduct(S.source_bivector, corrections, K)
