"""
Identity checks on star products and brackets

Every check sweeps the monomial certificate of each part of a catalogued
identity and reports the first violation in sweep order. A failing verdict
always carries a witness whose defect can be reproduced with evaluate_defect.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from naq.core.errors import PreconditionError
from naq.core.products.base_product import associator  # noqa: F401  (re-exported)
from naq.core.products.nilpotency import FAIL, INCONCLUSIVE, PASS, nilpotency_probe
from naq.identities.catalogue import BRACKET, get_identity
from naq.identities.certificate import CertificateSweep
from naq.identities.expression import ExpressionEvaluator, certificate_degree, sweep_bounds
from naq.identities.verdict import FAILS, HOLDS, BackstopResult, IdentityVerdict, Witness
from naq.poisson.bivector import Bivector
from naq.utils.corpus import random_polynomial

logger = logging.getLogger(__name__)


def _evaluator(spec, product, bivector):
    if spec.level == BRACKET:
        if bivector is None:
            bivector = product.source_bivector if product is not None else None
        if bivector is None:
            raise PreconditionError(f"{spec.name} needs a bivector")
        return ExpressionEvaluator(bivector=bivector, truncation_order=0), None
    if product is None:
        raise PreconditionError(f"{spec.name} needs a star product")
    return ExpressionEvaluator(product=product), product


def check_identity(name, product=None, bivector=None, degree_override=None, threads=1):
    """Certify or refute a catalogued identity

    Args:
        name (str): catalogue name
        product (StarProduct): product for star-level identities
        bivector (Bivector): bivector for bracket-level identities
        degree_override (int): sweep this per-slot degree instead of the structural bound
        threads (int): sweep workers, 0 for one per CPU

    Returns:
        IdentityVerdict: combined verdict with one sub-verdict per part
    """
    spec = get_identity(name)
    evaluator, star_product = _evaluator(spec, product, bivector)
    K = evaluator.truncation_order
    logger.info(f"Checking {name} identity")
    verdicts = []
    for part in spec.parts:
        if part.lowest_order > K:
            logger.info(f"{part.name}: vanishes below lambda^{part.lowest_order}, "
                        f"skipped at truncation order {K}")
            continue
        bounds = sweep_bounds(part.expression, star_product, K, degree_override)
        degree = max(certificate_degree(part.expression, star_product).values(), default=0)
        sweep = CertificateSweep(evaluator, part.expression, part.slots, bounds,
                                 part.symmetric_pairs, part=part.name, threads=threads)
        outcome = sweep.run()
        verdict = IdentityVerdict(
            identity=part.name,
            status=HOLDS if outcome.witness is None else FAILS,
            certificate_degree=degree,
            lambda_orders_checked=K,
            slot_bounds=tuple((slot, bounds.as_dict()[slot]) for slot in part.slots),
            total_bound=bounds.total_bound,
            tuples_checked=outcome.tuples_checked,
            certificate_complete=part.complete,
            witness=outcome.witness,
        )
        if verdict.holds:
            logger.info(f"{part.name}: holds on {outcome.tuples_checked} monomial tuples")
        else:
            logger.info(f"{part.name}: fails at lambda^{outcome.witness.lambda_order} "
                        f"after {outcome.tuples_checked} tuples")
        verdicts.append(verdict)
    evaluator.clear()
    if not verdicts:
        logger.warning(f"{name} is inconclusive: no part can be nonzero up to lambda^{K}")
        return IdentityVerdict.inconclusive(name, K)
    if len(verdicts) == 1 and verdicts[0].identity == name:
        return verdicts[0]
    return IdentityVerdict.combine(name, verdicts)


def check_associative(S, **options):
    return check_identity("associative", product=S, **options)


def check_flexible(S, **options):
    return check_identity("flexible", product=S, **options)


def check_right_alternative(S, **options):
    """Polarized A(f, g, g) = 0 and the right Moufang identity, reported as parts"""
    return check_identity("right_alternative", product=S, **options)


def check_alternative(S, **options):
    return check_identity("alternative", product=S, **options)


def check_sandwich_identity(S, **options):
    return check_identity("sandwich", product=S, **options)


def check_commutator_derivation(S, **options):
    return check_identity("commutator_derivation", product=S, **options)


def check_unitality(S, **options):
    return check_identity("unitality", product=S, **options)


def malcev_identity_check(P, **options):
    return check_identity("malcev", bivector=P, **options)


def shestakov_identity_check(P, **options):
    return check_identity("shestakov", bivector=P, **options)


def _find_part(spec, part):
    if part is None:
        return spec.parts[0]
    for candidate in spec.parts:
        if candidate.name == part:
            return candidate
    raise KeyError(f"{spec.name} has no part {part!r}")


def evaluate_defect(name, arguments, product=None, bivector=None, part=None):
    """Defect series of one identity part on concrete arguments"""
    spec = get_identity(name)
    evaluator, _ = _evaluator(spec, product, bivector)
    return evaluator.evaluate(_find_part(spec, part).expression, arguments)


def reproduce_witness(name, verdict, product=None, bivector=None):
    """True when the witness of a verdict on identity ``name`` re-evaluates to its defect"""
    witness = verdict.witness
    if witness is None:
        return False
    value = evaluate_defect(name, witness.argument_dict(), product, bivector,
                            witness.part)
    lowest = value.lowest_order()
    return lowest is not None and lowest == (witness.lambda_order, witness.defect)


def backstop(name, target, samples, rng, terms=3, coefficient_range=5):
    """Evaluate an identity on random arguments of degree above its certificate bound

    ``target`` is a StarProduct, or a Bivector for bracket identities. A
    contradiction means a holds verdict was wrong; none are expected.
    """
    spec = get_identity(name)
    if isinstance(target, Bivector):
        product, bivector = None, target
    else:
        product, bivector = target, None
    evaluator, star_product = _evaluator(spec, product, bivector)
    n = evaluator.dimension
    contradictions = 0
    first = None
    parts = [p for p in spec.parts if p.lowest_order <= evaluator.truncation_order]
    for part in parts:
        bounds = sweep_bounds(part.expression, star_product, evaluator.truncation_order).as_dict()
        for _ in range(samples):
            arguments = {slot: random_polynomial(n, bounds[slot] + 1, rng, terms, coefficient_range)
                         for slot in part.slots}
            value = evaluator.evaluate(part.expression, arguments)
            lowest = value.lowest_order()
            if lowest is not None:
                contradictions += 1
                if first is None:
                    first = Witness(part.name, tuple(arguments.items()), lowest[0], lowest[1])
        evaluator.clear()
    if contradictions:
        logger.error(f"Backstop found {contradictions} contradictions for {name}")
    return BackstopResult(samples * len(parts), contradictions, first)


@dataclass(frozen=True)
class Lemma2Report:
    probes: int = 0
    passes: int = 0
    inconclusive: int = 0
    failures: tuple = field(default_factory=tuple)

    @property
    def holds(self):
        return not self.failures

    def to_dict(self):
        return {
            "status": "pass" if self.holds else "fail",
            "probes": self.probes,
            "passes": self.passes,
            "inconclusive": self.inconclusive,
            "failures": [dict(element=e, **probe.to_dict()) for e, probe in self.failures],
        }


def cross_check_lemma2(S, corpus, max_power=3):
    """Probe every nonzero corpus element for powers k = 2..max(2, K // r)

    Elements of lowest order 0 use powers 2..max_power.
    """
    probes = passes = inconclusive = 0
    failures = []
    for element in corpus:
        element = S.lift(element)
        lowest = element.lowest_order()
        if lowest is None:
            logger.warning("Skipping the zero element in the nilpotency corpus")
            continue
        r = lowest[0]
        top = max_power if r == 0 else max(2, S.truncation_order // r)
        for k in range(2, top + 1):
            result = nilpotency_probe(S, element, k)
            probes += 1
            if result.status == PASS:
                passes += 1
            elif result.status == INCONCLUSIVE:
                inconclusive += 1
            elif result.status == FAIL:
                failures.append((element.to_exprs(), result))
    logger.info(f"Nilpotency cross-check: {passes} pass, {inconclusive} inconclusive, "
                f"{len(failures)} fail")
    return Lemma2Report(probes, passes, inconclusive, tuple(failures))
