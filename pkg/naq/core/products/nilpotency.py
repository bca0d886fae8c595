"""
Nilpotency probe: a nonzero element never has a vanishing star power

If f has lowest order r with coefficient f_r, the lambda^(rk) coefficient of
the k-th star power is the pointwise power f_r^k, whatever the association,
and everything below that order vanishes.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from naq.core.errors import PreconditionError
from naq.core.products.base_product import star_power

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ProbeResult:
    status: str
    power: int
    lowest_order: int
    expected_order: int
    coefficient: object = None
    failures: tuple = field(default_factory=tuple)

    def to_dict(self):
        return {
            "status": self.status,
            "power": self.power,
            "lowest_order": self.lowest_order,
            "expected_order": self.expected_order,
            "coefficient": None if self.coefficient is None else self.coefficient.to_expr(),
            "failures": list(self.failures),
        }


def nilpotency_probe(S, f, k):
    """Check the leading coefficient of both associations of f^k

    Returns:
        ProbeResult: ``pass`` when both associations start at lambda^(rk) with
        coefficient f_r^k != 0, ``inconclusive`` when rk exceeds K, ``fail`` otherwise
    """
    f = S.lift(f)
    lowest = f.lowest_order()
    if lowest is None:
        raise PreconditionError("nilpotency probe needs a nonzero element")
    r, leading = lowest
    order = r * k
    if order > S.truncation_order:
        logger.warning(f"Probe of power {k} at lowest order {r} exceeds truncation order "
                       f"{S.truncation_order}; inconclusive")
        return ProbeResult(INCONCLUSIVE, k, r, order)

    expected = leading ** k
    failures = []
    for association in ("left", "right"):
        power = star_power(S, f, k, association)
        for t in range(order):
            if not power.coefficient(t).is_zero:
                failures.append(f"{association}: nonzero coefficient below lambda^{order} at lambda^{t}")
                break
        if power.coefficient(order) != expected:
            failures.append(f"{association}: lambda^{order} coefficient "
                            f"{power.coefficient(order).to_expr()} differs from {expected.to_expr()}")
    if expected.is_zero:
        failures.append(f"leading coefficient of power {k} vanishes")
    if failures:
        logger.error(f"Nilpotency probe failed for power {k}: {failures}")
        return ProbeResult(FAIL, k, r, order, expected, tuple(failures))
    return ProbeResult(PASS, k, r, order, expected)
