"""
Star product with user-supplied corrections
"""
from __future__ import annotations

import logging

from naq.core.products.base_product import StarProduct

logger = logging.getLogger(__name__)


class CustomProduct(StarProduct):
    """Product with explicit C_1..C_k, zero-padded to K

    Only the antisymmetric part of C_1 is constrained; symmetric first-order
    terms and arbitrary higher corrections are accepted as given.
    """

    family = "custom"


def make_custom(P, corrections, K):
    product = CustomProduct(P, corrections, K)
    logger.info(f"Custom product with {sum(1 for c in product.corrections if not c.is_empty)} "
                f"nonzero corrections up to order {K}")
    return product
