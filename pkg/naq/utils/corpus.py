"""
Seeded random polynomials and series for backstops and probes

All randomness goes through a numpy Generator so a corpus seed reproduces
every argument exactly.
"""
from __future__ import annotations

import logging
from fractions import Fraction

import numpy as np

from naq.algebra.polynomial import Polynomial
from naq.algebra.series import LambdaSeries

logger = logging.getLogger(__name__)


def make_rng(seed):
    return np.random.default_rng(seed)


def _exponents(dimension, degree, rng):
    return tuple(int(e) for e in rng.multinomial(degree, [1.0 / dimension] * dimension))


def _coefficient(rng, coefficient_range):
    numerator = 0
    while numerator == 0:
        numerator = int(rng.integers(-coefficient_range, coefficient_range + 1))
    return Fraction(numerator, int(rng.integers(1, 4)))


def random_polynomial(dimension, degree, rng, terms=3, coefficient_range=5):
    """Random polynomial of total degree exactly ``degree``

    The first term has degree ``degree``; the remaining ``terms - 1`` have lower
    degree, so the leading term never cancels.
    """
    pairs = [(_exponents(dimension, degree, rng), _coefficient(rng, coefficient_range))]
    if degree > 0:
        for _ in range(terms - 1):
            lower = int(rng.integers(0, degree))
            pairs.append((_exponents(dimension, lower, rng), _coefficient(rng, coefficient_range)))
    return Polynomial.from_terms(dimension, pairs)


def random_series(dimension, truncation_order, rng, lowest_order=0, max_degree=2, terms=2):
    """Random series whose lowest nonzero coefficient sits at ``lowest_order``"""
    coefficients = [Polynomial.zero(dimension)] * (truncation_order + 1)
    for r in range(lowest_order, truncation_order + 1):
        degree = int(rng.integers(0, max_degree + 1))
        if r == lowest_order or rng.random() < 0.5:
            coefficients[r] = random_polynomial(dimension, degree, rng, terms)
    return LambdaSeries(coefficients)


def nilpotency_corpus(dimension, truncation_order, rng, size=50):
    """Nonzero elements for the nilpotency cross-check

    Starts with the fixed elements x1, 1 + lambda x2 and lambda^2 x3 (where the
    dimension and truncation allow) and fills up with random series of every
    lowest order up to K.
    """
    n, K = dimension, truncation_order
    corpus = [LambdaSeries.from_polynomial(Polynomial.variable(n, 0), K)]
    if K >= 1:
        corpus.append(LambdaSeries.from_polynomial(Polynomial.one(n), K)
                      + LambdaSeries.from_polynomial(Polynomial.variable(n, min(1, n - 1)), K, 1))
    if K >= 2:
        corpus.append(LambdaSeries.from_polynomial(Polynomial.variable(n, min(2, n - 1)), K, 2))
    while len(corpus) < size:
        lowest = len(corpus) % (K + 1)
        corpus.append(random_series(n, K, rng, lowest))
    logger.debug(f"Built nilpotency corpus of {len(corpus)} elements")
    return corpus[:size]
