"""
Record format for bivectors, products and gauge transforms

Records are plain JSON-ready structures. Polynomial coefficients are written as
expression strings in the input grammar and multi-indices as integer lists, so
everything the engine emits can be read back by parse_poly_expr.
"""
from __future__ import annotations

import json
import logging

from naq.algebra.diffops import BidiffOperator, DiffOperator
from naq.core.errors import ConfigError, ExpressionParseError
from naq.core.products.custom_product import CustomProduct
from naq.core.products.gauge import GaugeTransform
from naq.poisson.bivector import Bivector
from naq.utils.expr_parser import parse_poly_expr

logger = logging.getLogger(__name__)


def _index(values, dimension, what):
    try:
        index = tuple(int(v) for v in values)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"{what} {values!r} is not a list of integers") from e
    if len(index) != dimension or any(v < 0 for v in index):
        raise ConfigError(f"{what} {list(values)} is not a multi-index of dimension {dimension}")
    return index


def _coefficient(value, dimension):
    if isinstance(value, (float, list, dict)) or value is None:
        raise ConfigError(f"coefficient {value} must be an integer or an expression string")
    return parse_poly_expr(str(value), dimension)


# Bivectors

def bivector_to_records(P):
    return {
        "name": P.name,
        "dimension": P.dimension,
        "entries": [{"indices": [i + 1, j + 1], "expr": value.to_expr()}
                    for i, j, value in P.upper_entries()],
    }


def bivector_from_records(record):
    n = int(record["dimension"])
    upper = {}
    for entry in record.get("entries", []):
        i, j = (int(v) - 1 for v in entry["indices"])
        upper[(i, j)] = _coefficient(entry["expr"], n)
    return Bivector.from_upper(n, upper, name=record.get("name", "custom"))


# Bidifferential corrections

def operator_to_records(op):
    return [{"coeff": term.coefficient.to_expr(),
             "alpha": list(term.left_index),
             "beta": list(term.right_index)} for term in op.terms]


def operator_from_records(records, dimension):
    mapping = {}
    for record in records:
        alpha = _index(record["alpha"], dimension, "alpha")
        beta = _index(record["beta"], dimension, "beta")
        coeff = _coefficient(record["coeff"], dimension)
        mapping[(alpha, beta)] = mapping[(alpha, beta)] + coeff if (alpha, beta) in mapping else coeff
    return BidiffOperator.from_mapping(dimension, mapping)


def product_to_records(S):
    """Corrections C_1..C_K, one list of term records per order"""
    return [operator_to_records(op) for op in S.corrections]


def corrections_from_records(records, dimension):
    return [operator_from_records(terms, dimension) for terms in records]


def product_record(S):
    """Self-contained record of a product, bivector included"""
    return {
        "family": S.family,
        "truncation_order": S.truncation_order,
        "bivector": bivector_to_records(S.source_bivector),
        "corrections": product_to_records(S),
    }


def product_from_records(record, bivector=None):
    """Rebuild a product from product_record output

    The family is recorded for reference only; the result carries the stored
    corrections verbatim.
    """
    if bivector is None:
        bivector = bivector_from_records(record["bivector"])
    K = int(record["truncation_order"])
    corrections = corrections_from_records(record.get("corrections", []), bivector.dimension)
    return CustomProduct(bivector, corrections, K)


# Gauge transforms

def gauge_to_records(D):
    return [[{"coeff": coeff.to_expr(), "alpha": list(alpha)} for alpha, coeff in layer.terms]
            for layer in D.layers]


def gauge_from_records(records, dimension, truncation_order):
    layers = []
    for terms in records:
        mapping = {}
        for record in terms:
            alpha = _index(record["alpha"], dimension, "alpha")
            coeff = _coefficient(record["coeff"], dimension)
            mapping[alpha] = mapping[alpha] + coeff if alpha in mapping else coeff
        layers.append(DiffOperator(dimension, mapping))
    return GaugeTransform(dimension, layers, truncation_order)


def load_corrections(path, dimension):
    """Read custom corrections from a JSON file

    The file holds either the list of per-order term lists or an object with a
    ``corrections`` key.
    """
    logger.info(f"Loading corrections from {path}")
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    if isinstance(data, dict):
        data = data.get("corrections")
    if not isinstance(data, list):
        raise ConfigError(f"{path} does not contain a list of corrections")
    try:
        return corrections_from_records(data, dimension)
    except (KeyError, TypeError) as e:
        raise ConfigError(f"malformed correction record in {path}: {e}") from e
    except ExpressionParseError as e:
        raise ConfigError(f"bad coefficient in {path}: {e}") from e
