"""
Verdicts of identity checks and their witnesses
"""
from __future__ import annotations

from dataclasses import dataclass, replace

HOLDS = "holds-on-certificate"
FAILS = "fails"
# Every part of the identity vanishes identically up to the truncation order
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Witness:
    """Monomial arguments on which a defect is nonzero

    ``defect`` is the coefficient of lambda^lambda_order, the first order at
    which the defect series does not vanish.
    """
    part: str
    arguments: tuple
    lambda_order: int
    defect: object

    def argument_dict(self):
        return dict(self.arguments)

    def to_dict(self):
        return {
            "part": self.part,
            "arguments": {name: value.to_expr() for name, value in self.arguments},
            "lambda_order": self.lambda_order,
            "defect": self.defect.to_expr(),
        }


@dataclass(frozen=True)
class IdentityVerdict:
    identity: str
    status: str
    certificate_degree: int
    lambda_orders_checked: int
    slot_bounds: tuple = ()
    total_bound: int = 0
    tuples_checked: int = 0
    certificate_complete: bool = True
    witness: Witness | None = None
    parts: tuple = ()
    backstop: object = None

    @property
    def holds(self):
        return self.status == HOLDS

    def with_backstop(self, result):
        return replace(self, backstop=result)

    @classmethod
    def inconclusive(cls, identity, truncation_order):
        return cls(identity=identity, status=INCONCLUSIVE, certificate_degree=0,
                   lambda_orders_checked=truncation_order, certificate_complete=False)

    @classmethod
    def combine(cls, identity, parts):
        """Fold sub-identity verdicts; the first part decides completeness"""
        failing = [p for p in parts if p.status == FAILS]
        witness = failing[0].witness if failing else None
        if failing:
            status = FAILS
        elif all(p.holds for p in parts):
            status = HOLDS
        else:
            status = INCONCLUSIVE
        return cls(
            identity=identity,
            status=status,
            certificate_degree=max(p.certificate_degree for p in parts),
            lambda_orders_checked=max(p.lambda_orders_checked for p in parts),
            slot_bounds=(failing[0] if failing else parts[0]).slot_bounds,
            total_bound=max(p.total_bound for p in parts),
            tuples_checked=sum(p.tuples_checked for p in parts),
            certificate_complete=parts[0].certificate_complete,
            witness=witness,
            parts=tuple(parts),
        )

    def to_dict(self):
        result = {
            "identity": self.identity,
            "status": self.status,
            "certificate_degree": self.certificate_degree,
            "slot_bounds": dict(self.slot_bounds),
            "total_bound": self.total_bound,
            "lambda_orders_checked": self.lambda_orders_checked,
            "tuples_checked": self.tuples_checked,
            "certificate_complete": self.certificate_complete,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }
        if self.parts:
            result["parts"] = [p.to_dict() for p in self.parts]
        if self.backstop is not None:
            result["backstop"] = self.backstop.to_dict()
        return result


@dataclass(frozen=True)
class BackstopResult:
    """Randomized high-degree re-check of a holds verdict"""
    samples: int
    contradictions: int = 0
    first_contradiction: Witness | None = None

    @property
    def clean(self):
        return self.contradictions == 0

    def to_dict(self):
        return {
            "samples": self.samples,
            "contradictions": self.contradictions,
            "first_contradiction": (None if self.first_contradiction is None
                                    else self.first_contradiction.to_dict()),
        }
