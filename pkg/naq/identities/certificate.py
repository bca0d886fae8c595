"""
Monomial certificate sweep

A multilinear polydifferential identity whose terms apply at most m_i
derivatives to slot i, and at most T in total, vanishes for all polynomial
arguments iff it vanishes on every tuple of monomials x^gamma_i with
|gamma_i| <= m_i and sum |gamma_i| <= T. The sweep enumerates those tuples by
total degree, then lexicographically in graded-lex monomial rank, so the first
violation found is the same whatever the thread count.
"""
from __future__ import annotations

import logging
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice

from naq.algebra.polynomial import Polynomial, index_degree, monomials_up_to
from naq.core.errors import ConfigError
from naq.identities.verdict import Witness

logger = logging.getLogger(__name__)

BLOCK_SIZE = 64


def resolve_thread_count(threads=None):
    """Number of sweep workers; NAQ_THREADS overrides, 0 means one per CPU"""
    env = os.environ.get("NAQ_THREADS")
    if env is not None and env.strip():
        try:
            threads = int(env)
        except ValueError as e:
            raise ConfigError(f"NAQ_THREADS must be an integer, got {env!r}") from e
    if threads is None:
        return 1
    if threads < 0:
        raise ConfigError(f"thread count must be non-negative, got {threads}")
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def monomial_tuples(dimension, slot_bounds, total_bound, symmetric_pairs=()):
    """Yield tuples of exponent tuples in sweep order

    Args:
        dimension (int): ambient dimension
        slot_bounds (list): per-slot maximal degree
        total_bound (int): maximal sum of degrees
        symmetric_pairs (list): slot index pairs (i, j), i < j, swept only with
            rank(slot i) <= rank(slot j)
    """
    monomials = monomials_up_to(dimension, max(slot_bounds, default=0))
    for ranks in rank_tuples(monomials, slot_bounds, total_bound, symmetric_pairs):
        yield tuple(monomials[r] for r in ranks)


def rank_tuples(monomials, slot_bounds, total_bound, symmetric_pairs=()):
    """Tuples of graded-lex monomial ranks; see monomial_tuples"""
    k = len(slot_bounds)
    ranges = {}
    for rank, exponents in enumerate(monomials):
        d = index_degree(exponents)
        start, _ = ranges.get(d, (rank, rank))
        ranges[d] = (start, rank + 1)
    capacity = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        capacity[i] = capacity[i + 1] + slot_bounds[i]
    constraints = [[p for p, q in symmetric_pairs if q == i] for i in range(k)]
    prefix = []

    def extend(i, remaining):
        if i == k:
            if remaining == 0:
                yield tuple(prefix)
            return
        low = max(0, remaining - capacity[i + 1])
        high = min(slot_bounds[i], remaining)
        floor = max((prefix[p] for p in constraints[i]), default=0)
        for d in range(low, high + 1):
            start, stop = ranges[d]
            for rank in range(max(start, floor), stop):
                prefix.append(rank)
                yield from extend(i + 1, remaining - d)
                prefix.pop()

    if k == 0:
        yield ()
        return
    for total in range(min(total_bound, capacity[0]) + 1):
        yield from extend(0, total)


@dataclass(frozen=True)
class SweepOutcome:
    tuples_checked: int
    witness: Witness | None = None


class CertificateSweep:
    """Evaluate one expression over every monomial tuple of a certificate"""

    def __init__(self, evaluator, expression, slots, bounds, symmetric_pairs=(), part=None,
                 threads=1):
        self.evaluator = evaluator
        self.expression = expression
        self.slots = tuple(slots)
        self.bounds = bounds
        self.part = part
        self.threads = resolve_thread_count(threads)
        index = {name: i for i, name in enumerate(self.slots)}
        self.symmetric_pairs = tuple(sorted((min(index[a], index[b]), max(index[a], index[b]))
                                            for a, b in symmetric_pairs))
        slot_bounds = bounds.as_dict()
        self.slot_bounds = [slot_bounds[name] for name in self.slots]
        for i, j in self.symmetric_pairs:
            shared = max(self.slot_bounds[i], self.slot_bounds[j])
            self.slot_bounds[i] = self.slot_bounds[j] = shared
        n = evaluator.dimension
        self.monomials = monomials_up_to(n, max(self.slot_bounds, default=0))
        self.arguments = [Polynomial.monomial(n, e) for e in self.monomials]

    def _check(self, ranks):
        arguments = {name: self.arguments[r] for name, r in zip(self.slots, ranks)}
        value = self.evaluator.evaluate(self.expression, arguments)
        lowest = value.lowest_order()
        if lowest is None:
            return None
        order, defect = lowest
        return Witness(self.part, tuple((name, arguments[name]) for name in self.slots),
                       order, defect)

    def _scan(self, block):
        for position, ranks in enumerate(block):
            witness = self._check(ranks)
            if witness is not None:
                return position, witness
        return None

    def _blocks(self):
        tuples = rank_tuples(self.monomials, self.slot_bounds, self.bounds.total_bound,
                             self.symmetric_pairs)
        while True:
            block = list(islice(tuples, BLOCK_SIZE))
            if not block:
                return
            yield block

    def run(self):
        """Sweep until the first violation

        Returns:
            SweepOutcome: tuples checked up to and including the witness, if any
        """
        logger.debug(f"Sweeping {self.part} with slot bounds {self.slot_bounds}, "
                     f"total bound {self.bounds.total_bound}, {self.threads} thread(s)")
        if self.threads == 1:
            checked = 0
            for block in self._blocks():
                found = self._scan(block)
                if found is not None:
                    return SweepOutcome(checked + found[0] + 1, found[1])
                checked += len(block)
            return SweepOutcome(checked)
        return self._run_parallel()

    def _run_parallel(self):
        checked = 0
        window = 2 * self.threads
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            pending = deque()
            blocks = self._blocks()
            exhausted = False
            while pending or not exhausted:
                while not exhausted and len(pending) < window:
                    block = next(blocks, None)
                    if block is None:
                        exhausted = True
                    else:
                        pending.append((len(block), executor.submit(self._scan, block)))
                if not pending:
                    break
                size, future = pending.popleft()
                found = future.result()
                if found is not None:
                    for _, other in pending:
                        other.cancel()
                    return SweepOutcome(checked + found[0] + 1, found[1])
                checked += size
        return SweepOutcome(checked)
