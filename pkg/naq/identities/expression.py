"""
Identity expression trees, their certificate bounds and a memoized evaluator

An identity is a linear combination of nested star products, pointwise
products, brackets and Jacobiators of named argument slots. Trees are never
turned into operators; they are evaluated on concrete arguments, and the
differential orders they can apply to each slot are bounded structurally.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from naq.algebra.polynomial import Polynomial
from naq.algebra.series import LambdaSeries
from naq.core.errors import PreconditionError
from naq.poisson.bivector import bracket_series
from naq.poisson.jacobiator import jacobiator_series

logger = logging.getLogger(__name__)


class Expr:
    """Base class of expression nodes; supports +, - and rational scaling"""

    def __add__(self, other):
        return Combination(_terms(self) + _terms(other))

    def __sub__(self, other):
        return Combination(_terms(self) + tuple((-c, e) for c, e in _terms(other)))

    def __neg__(self):
        return Combination(tuple((-c, e) for c, e in _terms(self)))

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return Combination(tuple((scalar * c, e) for c, e in _terms(self)))


@dataclass(frozen=True)
class Slot(Expr):
    name: str


@dataclass(frozen=True)
class Unit(Expr):
    """The constant function 1"""


@dataclass(frozen=True)
class Star(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Dot(Expr):
    """Pointwise product"""
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Bracket(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Jacobiator(Expr):
    first: Expr
    second: Expr
    third: Expr


@dataclass(frozen=True)
class Combination(Expr):
    terms: tuple


def _terms(expr):
    if isinstance(expr, Combination):
        return expr.terms
    return ((Fraction(1), expr),)


def children(expr):
    if isinstance(expr, (Star, Dot, Bracket)):
        return (expr.left, expr.right)
    if isinstance(expr, Jacobiator):
        return (expr.first, expr.second, expr.third)
    if isinstance(expr, Combination):
        return tuple(e for _, e in expr.terms)
    return ()


def associator_expr(a, b, c):
    """f * (g * h) - (f * g) * h"""
    return Star(a, Star(b, c)) - Star(Star(a, b), c)


def commutator_expr(a, b):
    return Star(a, b) - Star(b, a)


def jordan_expr(a, b):
    return Star(a, b) + Star(b, a)


def slot_names(expr):
    """Slot names in order of first appearance, left to right"""
    seen = []

    def visit(node):
        if isinstance(node, Slot):
            if node.name not in seen:
                seen.append(node.name)
        for child in children(node):
            visit(child)

    visit(expr)
    return tuple(seen)


def _rename(expr, mapping):
    if isinstance(expr, Slot):
        return Slot(mapping[expr.name])
    if isinstance(expr, Unit):
        return expr
    if isinstance(expr, Combination):
        return Combination(tuple((c, _rename(e, mapping)) for c, e in expr.terms))
    return type(expr)(*(_rename(child, mapping) for child in children(expr)))


@lru_cache(maxsize=4096)
def canonical_form(expr):
    """Rename slots to s0, s1, ... by first appearance

    Returns the renamed template and the original names in slot order, so that
    structurally equal subtrees share evaluations.
    """
    names = slot_names(expr)
    mapping = {name: f"s{i}" for i, name in enumerate(names)}
    return _rename(expr, mapping), names


# Order bounds

def _max(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _node_operators(expr, product):
    """(lambda order, left order, right order, total order) of the binary operator at a node"""
    if isinstance(expr, Star):
        if product is None:
            raise PreconditionError("star nodes need a star product")
        return [(r,) + orders for r, orders in enumerate(product.correction_orders())
                if orders is not None]
    if isinstance(expr, Dot):
        return [(0, 0, 0, 0)]
    return [(0, 1, 1, 2)]


def _graded(expr, product, K):
    """Per lambda-order maximal slot orders and total order of a subtree

    Returns (total, slots) where total[t] is the largest total differential
    order reaching the slots at lambda^t (None when that order cannot occur) and
    slots[name][t] the largest order on one slot.
    """
    if isinstance(expr, Slot):
        return [0] + [None] * K, {expr.name: [0] + [None] * K}
    if isinstance(expr, Unit):
        return [0] + [None] * K, {}
    if isinstance(expr, Combination):
        total = [None] * (K + 1)
        slots = {}
        for _, term in expr.terms:
            sub_total, sub_slots = _graded(term, product, K)
            total = [_max(a, b) for a, b in zip(total, sub_total)]
            for name, values in sub_slots.items():
                current = slots.get(name, [None] * (K + 1))
                slots[name] = [_max(a, b) for a, b in zip(current, values)]
        return total, slots
    if isinstance(expr, Jacobiator):
        parts = [_graded(child, product, K) for child in children(expr)]
        total = [None] * (K + 1)
        slots = {name: [None] * (K + 1) for _, sub in parts for name in sub}
        for a, ta in enumerate(parts[0][0]):
            if ta is None:
                continue
            for b, tb in enumerate(parts[1][0][:K + 1 - a]):
                if tb is None:
                    continue
                for c, tc in enumerate(parts[2][0][:K + 1 - a - b]):
                    if tc is None:
                        continue
                    t = a + b + c
                    total[t] = _max(total[t], 3 + ta + tb + tc)
                    for (_, sub), order in zip(parts, (a, b, c)):
                        for name, values in sub.items():
                            if values[order] is not None:
                                slots[name][t] = _max(slots[name][t], values[order] + 1)
        return total, slots

    left_total, left_slots = _graded(expr.left, product, K)
    right_total, right_slots = _graded(expr.right, product, K)
    total = [None] * (K + 1)
    slots = {name: [None] * (K + 1) for name in list(left_slots) + list(right_slots)}
    for r, p, q, t_op in _node_operators(expr, product):
        for a in range(K + 1 - r):
            if left_total[a] is None:
                continue
            for b in range(K + 1 - r - a):
                if right_total[b] is None:
                    continue
                t = r + a + b
                total[t] = _max(total[t], t_op + left_total[a] + right_total[b])
                for name, values in left_slots.items():
                    if values[a] is not None:
                        slots[name][t] = _max(slots[name][t], p + values[a])
                for name, values in right_slots.items():
                    if values[b] is not None:
                        slots[name][t] = _max(slots[name][t], q + values[b])
    return total, slots


@dataclass(frozen=True)
class SweepBounds:
    """Per-slot degree bounds and a bound on the total degree of a monomial tuple"""
    slot_bounds: tuple
    total_bound: int

    def as_dict(self):
        return dict(self.slot_bounds)

    @property
    def max_slot_bound(self):
        return max((m for _, m in self.slot_bounds), default=0)


def sweep_bounds(expr, product=None, truncation_order=None, override=None):
    """Lambda-graded certificate bounds of an identity

    Args:
        expr (Expr): identity expression
        product (StarProduct): product for star nodes, None for bracket-only trees
        truncation_order (int): K; defaults to the product's
        override (int): optional larger per-slot degree to sweep instead

    Returns:
        SweepBounds: slot bounds in slot order and the total bound
    """
    if truncation_order is None:
        truncation_order = product.truncation_order if product is not None else 0
    total, slots = _graded(expr, product, truncation_order)
    names = slot_names(expr)
    slot_bounds = tuple((name, max((v for v in slots[name] if v is not None), default=0))
                        for name in names)
    total_bound = max((v for v in total if v is not None), default=0)
    if override is not None:
        required = max((m for _, m in slot_bounds), default=0)
        if override < required:
            raise PreconditionError(
                f"certificate degree override {override} is below the structural bound {required}")
        slot_bounds = tuple((name, override) for name, _ in slot_bounds)
        total_bound = max(total_bound, override)
    return SweepBounds(slot_bounds, total_bound)


def certificate_degree(expr, product=None):
    """Ungraded per-slot bound: each star node adds the largest correction order on
    its side, each bracket or Jacobiator adds 1

    Returns:
        dict: slot name -> bound
    """
    if product is not None:
        orders = [o for o in product.correction_orders()[1:] if o is not None]
        star_left = max((p for p, _, _ in orders), default=0)
        star_right = max((q for _, q, _ in orders), default=0)
    bounds = {}

    def visit(node, depth):
        if isinstance(node, Slot):
            bounds[node.name] = max(bounds.get(node.name, 0), depth)
            return
        if isinstance(node, Star):
            if product is None:
                raise PreconditionError("star nodes need a star product")
            visit(node.left, depth + star_left)
            visit(node.right, depth + star_right)
        elif isinstance(node, (Bracket, Jacobiator)):
            for child in children(node):
                visit(child, depth + 1)
        else:
            for child in children(node):
                visit(child, depth)

    visit(expr, 0)
    return {name: bounds[name] for name in slot_names(expr)}


class ExpressionEvaluator:
    """Evaluate expression trees on concrete series with shared subresults

    Subtrees are cached by their canonical template and the arguments bound to
    their slots, so A(f, g, h) + A(h, g, f) evaluates g * h once per argument
    tuple and repeated subtrees are reused across tuples. The cache is emptied
    whenever it reaches ``cache_limit`` entries.
    """

    cache_limit = 20000

    def __init__(self, product=None, bivector=None, truncation_order=None):
        if product is not None:
            bivector = product.source_bivector
            truncation_order = product.truncation_order
        if bivector is None:
            raise PreconditionError("an evaluator needs a product or a bivector")
        self.product = product
        self.bivector = bivector
        self.dimension = bivector.dimension
        self.truncation_order = 0 if truncation_order is None else truncation_order
        self._cache = {}
        self._unit = LambdaSeries.constant(Polynomial.one(self.dimension), self.truncation_order)

    def lift(self, value):
        return LambdaSeries.lift(value, self.dimension, self.truncation_order)

    def evaluate(self, expr, arguments):
        """Evaluate ``expr`` with slot name -> Polynomial or LambdaSeries"""
        arguments = {name: self.lift(value) for name, value in arguments.items()}
        return self._evaluate(expr, arguments)

    def _evaluate(self, expr, arguments):
        if isinstance(expr, Slot):
            return arguments[expr.name]
        if isinstance(expr, Unit):
            return self._unit
        template, names = canonical_form(expr)
        key = (template, tuple(arguments[name] for name in names))
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        value = self._compute(expr, arguments)
        if len(self._cache) >= self.cache_limit:
            self._cache.clear()
        self._cache[key] = value
        return value

    def _compute(self, expr, arguments):
        if isinstance(expr, Combination):
            total = None
            for coefficient, term in expr.terms:
                value = self._evaluate(term, arguments).scale(coefficient)
                total = value if total is None else total + value
            return total
        values = [self._evaluate(child, arguments) for child in children(expr)]
        if isinstance(expr, Star):
            if self.product is None:
                raise PreconditionError("star nodes need a star product")
            return self.product.star(*values)
        if isinstance(expr, Dot):
            return values[0].pointwise_mul(values[1])
        if isinstance(expr, Bracket):
            return bracket_series(self.bivector, *values)
        if isinstance(expr, Jacobiator):
            return jacobiator_series(self.bivector, *values)
        raise TypeError(f"unknown expression node {type(expr).__name__}")

    def clear(self):
        self._cache.clear()
