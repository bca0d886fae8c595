"""
Product factory module for creating star products from configuration
"""
from __future__ import annotations

import logging

from naq.core.errors import ConfigError
from naq.core.products.custom_product import make_custom
from naq.core.products.flexible_product import make_flexible
from naq.core.products.gauge import gauge_transform
from naq.core.products.moyal_product import make_moyal

logger = logging.getLogger(__name__)


class ProductFactory:
    """Factory class for creating the star product of a session"""

    KINDS = ("moyal", "flexible", "custom")

    @staticmethod
    def create_product(kind, bivector, truncation_order, corrections=None, gauge=None):
        """Create and return the star product of the requested family

        Args:
            kind (str): 'moyal', 'flexible' or 'custom'
            bivector (Bivector): the source bivector
            truncation_order (int): K
            corrections (list): BidiffOperators C_1.. for custom products
            gauge (GaugeTransform): optional gauge applied to the constructed product

        Returns:
            StarProduct: a product of the requested family
        """
        kind = kind.lower()

        if kind == "moyal":
            logger.info(f"Creating Moyal product up to order {truncation_order}")
            product = make_moyal(bivector, truncation_order)
        elif kind == "flexible":
            logger.info(f"Creating flexible product up to order {truncation_order}")
            product = make_flexible(bivector, truncation_order)
        elif kind == "custom":
            if corrections is None:
                raise ConfigError("custom product needs corrections (inline or from a file)")
            logger.info(f"Creating custom product with {len(corrections)} corrections")
            product = make_custom(bivector, corrections, truncation_order)
        else:
            raise ConfigError(f"Unknown product kind: {kind!r}")

        if gauge is not None:
            logger.info("Applying gauge transformation")
            product = gauge_transform(product, gauge)
        return product
