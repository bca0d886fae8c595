"""
Session management for NAQ

A session builds the bivector and the star product a configuration describes,
runs the bracket diagnostics first and then the requested identity checks, and
collects everything into a Report.
"""
import logging
import time

from naq.core.errors import ConfigError, NaqError
from naq.core.products.factory import ProductFactory
from naq.core.report import Report, engine_info
from naq.identities.catalogue import BRACKET, get_identity
from naq.identities.checks import backstop, check_identity, cross_check_lemma2
from naq.poisson.constructors import BivectorFactory
from naq.poisson.diagnostics import (jacobi_check, lemma1_witness, malcev_check,
                                     nonvanishing_on_dense_set, shestakov_check)
from naq.poisson.jacobiator import jacobiator_tensor
from naq.utils.corpus import make_rng, nilpotency_corpus
from naq.utils.expr_parser import parse_star_expr
from naq.utils.serialization import (bivector_to_records, corrections_from_records,
                                     gauge_from_records, load_corrections, product_to_records)

logger = logging.getLogger(__name__)


class SessionManager:
    """Session management for NAQ - builds the objects of one configuration and runs it"""

    def __init__(self, session):
        """Initialize the session

        Args:
            session (SessionConfig): validated configuration
        """
        self.session = session
        self.bivector = BivectorFactory.create_bivector(session.bivector, session.dimension)
        self._product = None
        self._tensor = None

    @property
    def product(self):
        """The session star product, built on first use"""
        if self._product is None:
            self._product = self._build_product()
        return self._product

    def _build_product(self):
        session = self.session
        n, K = session.dimension, session.truncation_order
        corrections = None
        if session.product == "custom":
            try:
                if session.product_file is not None:
                    corrections = load_corrections(session.product_file, n)
                else:
                    corrections = corrections_from_records(session.corrections, n)
            except NaqError:
                raise
            except (KeyError, TypeError, ValueError) as e:
                raise ConfigError(f"malformed custom corrections: {e}") from e
        gauge = None
        if session.gauge:
            try:
                gauge = gauge_from_records(session.gauge, n, K)
            except NaqError:
                raise
            except (KeyError, TypeError, ValueError) as e:
                raise ConfigError(f"malformed gauge layers: {e}") from e

        return ProductFactory.create_product(session.product, self.bivector, K,
                                             corrections=corrections, gauge=gauge)

    @property
    def tensor(self):
        if self._tensor is None:
            self._tensor = jacobiator_tensor(self.bivector)
        return self._tensor

    def run_diagnostics(self):
        """Jacobi, Malcev and Shestakov status of the bivector"""
        threads = self.session.threads
        jacobi = jacobi_check(self.bivector, self.tensor)
        malcev = malcev_check(self.bivector, threads=threads)
        shestakov = shestakov_check(self.bivector, threads=threads)
        if jacobi.holds != malcev.holds:
            logger.error(f"Jacobi ({jacobi.status}) and Malcev ({malcev.status}) disagree "
                         f"for the {self.bivector.name} bivector")
        witness = lemma1_witness(self.bivector, self.tensor)
        return {
            "jacobi": jacobi.to_dict(),
            "malcev": malcev.to_dict(),
            "shestakov": shestakov.to_dict(),
            "lemma1_witness": None if witness is None else witness.to_dict(),
            "nonvanishing_on_dense_set": nonvanishing_on_dense_set(self.bivector),
        }

    def run_check(self, name, rng):
        spec = get_identity(name)
        target = self.bivector if spec.level == BRACKET else self.product
        options = dict(degree_override=self.session.certificate_degree_override,
                       threads=self.session.threads)
        if spec.level == BRACKET:
            verdict = check_identity(name, bivector=target, **options)
        else:
            verdict = check_identity(name, product=target, **options)
        if verdict.holds and self.session.backstop_samples:
            verdict = verdict.with_backstop(backstop(name, target, self.session.backstop_samples, rng))
        return verdict

    def run(self):
        """Run the whole session

        Returns:
            Report: diagnostics, verdicts and timing
        """
        started = time.perf_counter()
        timing = {}
        product = self.product
        report = Report(
            config=self.session.echo,
            bivector=bivector_to_records(self.bivector),
            product={
                "family": product.family,
                "truncation_order": product.truncation_order,
                "corrections": product_to_records(product),
            },
        )

        logger.info(f"Running bracket diagnostics for the {self.bivector.name} bivector")
        tick = time.perf_counter()
        report.diagnostics = self.run_diagnostics()
        timing["diagnostics"] = round(time.perf_counter() - tick, 6)

        rng = make_rng(self.session.corpus_seed)
        check_times = {}
        for name in self.session.checks:
            tick = time.perf_counter()
            verdict = self.run_check(name, rng)
            check_times[name] = round(time.perf_counter() - tick, 6)
            report.checks.append(verdict.to_dict())
        timing["checks"] = check_times

        if self.session.lemma2:
            tick = time.perf_counter()
            corpus = nilpotency_corpus(self.session.dimension, self.session.truncation_order,
                                       rng, self.session.lemma2_corpus_size)
            report.lemma2 = cross_check_lemma2(self.product, corpus).to_dict()
            timing["lemma2"] = round(time.perf_counter() - tick, 6)

        timing["total"] = round(time.perf_counter() - started, 6)
        report.timing = timing
        logger.info(f"Session finished: {len(report.checks)} checks, "
                    f"failed: {report.failed_checks or 'none'}")
        return report

    def jacobiator_document(self):
        """J^ijk expressions of the bivector with the Jacobi verdict"""
        return {
            "engine": engine_info(),
            "bivector": bivector_to_records(self.bivector),
            "jacobiator": self.tensor.to_records(),
            "jacobi": jacobi_check(self.bivector, self.tensor).to_dict(),
        }

    def evaluate(self, text):
        """Evaluate a star expression with the session product"""
        value = parse_star_expr(text, self.product)
        lowest = value.lowest_order()
        return {
            "engine": engine_info(),
            "expr": text,
            "truncation_order": self.product.truncation_order,
            "coefficients": value.to_exprs(),
            "lowest_order": None if lowest is None else lowest[0],
        }


def run_session(session):
    """Build and run a session; constructor preconditions propagate unchanged"""
    return SessionManager(session).run()
