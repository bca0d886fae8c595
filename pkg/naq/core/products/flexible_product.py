"""
Flexible product f * g = f.g + lambda {f, g}
"""
from __future__ import annotations

import logging

from naq.core.errors import PreconditionError
from naq.core.products.base_product import StarProduct

logger = logging.getLogger(__name__)


class FlexibleProduct(StarProduct):
    """First-order product of an arbitrary bivector; all C_r with r >= 2 vanish

    It is flexible for every bivector and associative only when the bracket
    vanishes identically.
    """

    family = "flexible"

    def __init__(self, bivector, truncation_order):
        if truncation_order < 1:
            raise PreconditionError("flexible product needs truncation order K >= 1")
        super().__init__(bivector, [bivector.bracket_operator], truncation_order)


def make_flexible(P, K):
    return FlexibleProduct(P, K)
