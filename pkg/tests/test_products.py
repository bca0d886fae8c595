from fractions import Fraction

import pytest

from conftest import BIVECTOR_CORPUS
from naq.algebra.diffops import BidiffOperator, DiffOperator
from naq.algebra.polynomial import Polynomial
from naq.algebra.series import LambdaSeries
from naq.core.errors import (ConfigError, DimensionMismatchError, PreconditionError,
                             TruncationMismatchError)
from naq.core.products.base_product import associator, commutator, star_power, unitality_check
from naq.core.products.custom_product import CustomProduct, make_custom
from naq.core.products.factory import ProductFactory
from naq.core.products.flexible_product import FlexibleProduct, make_flexible
from naq.core.products.gauge import GaugeTransform, gauge_transform
from naq.core.products.moyal_product import MoyalProduct, make_moyal, moyal_correction
from naq.core.products.nilpotency import INCONCLUSIVE, PASS, nilpotency_probe
from naq.identities.checks import check_associative, check_flexible, cross_check_lemma2
from naq.poisson.bivector import bracket
from naq.poisson.constructors import constant, su2, symplectic
from naq.utils.corpus import nilpotency_corpus, random_polynomial

X1, X2 = Polynomial.variable(2, 0), Polynomial.variable(2, 1)


def first_derivative_of_left(n):
    """E(f, g) = d1 f . g"""
    return BidiffOperator.from_mapping(n, {((1,) + (0,) * (n - 1), (0,) * n): 1})


def test_moyal_on_the_plane(plane):
    S = make_moyal(plane, 2)
    assert S.star(X1, X2).to_exprs() == ["x1*x2", "1", "0"]
    assert S.star(X2, X1).to_exprs() == ["x1*x2", "-1", "0"]
    assert S.star(X1 ** 2, X2 ** 2).to_exprs() == ["x1^2*x2^2", "4*x1*x2", "2"]
    assert commutator(S, X1, X2).to_exprs() == ["0", "2", "0"]
    assert associator(S, X1 ** 2, X2, X1 * X2).is_zero


def test_moyal_first_correction_is_the_bracket(plane):
    assert moyal_correction(plane, 1) == plane.bracket_operator
    assert moyal_correction(plane, 2).orders == (2, 2)


def test_moyal_with_rational_entries():
    P = constant([[0, Fraction(1, 2)], [Fraction(-1, 2), 0]])
    S = MoyalProduct(P, 2)
    assert S.star(X1, X2).to_exprs() == ["x1*x2", "1/2", "0"]
    assert S.star(X1 ** 2, X2 ** 2).coefficient(2) == Fraction(1, 2)


def test_moyal_needs_a_constant_bivector(su2):
    with pytest.raises(PreconditionError):
        MoyalProduct(su2, 2)


def test_truncation_order_zero_is_pointwise(plane):
    S = make_moyal(plane, 0)
    assert S.star(X1, X2).to_exprs() == ["x1*x2"]


def test_flexible_product(su2, x3):
    S = make_flexible(su2, 2)
    assert S.star(x3[0], x3[1]).to_exprs() == ["x1*x2", "x3", "0"]
    assert S.correction(2).is_empty
    assert associator(S, x3[0], x3[0], x3[1]).to_exprs() == ["0", "0", "-x2"]
    with pytest.raises(PreconditionError):
        FlexibleProduct(su2, 0)


def test_custom_product_checks_the_first_order_part(plane):
    with pytest.raises(PreconditionError) as excinfo:
        CustomProduct(plane, [BidiffOperator.empty(2)], 2)
    assert excinfo.value.witness == (X1, X2)


def test_custom_product_accepts_symmetric_first_order_terms(plane):
    symmetric = BidiffOperator.from_mapping(2, {((1, 0), (1, 0)): 3})
    S = make_custom(plane, [moyal_correction(plane, 1) + symmetric], 2)
    assert S.star(X1, X1).to_exprs() == ["x1^2", "3", "0"]
    assert S.correction(2).is_empty


def test_custom_product_preconditions(plane):
    C1 = moyal_correction(plane, 1)
    with pytest.raises(PreconditionError):
        CustomProduct(plane, [C1, C1, C1], 2)
    with pytest.raises(DimensionMismatchError):
        CustomProduct(plane, [BidiffOperator.empty(3)], 2)
    with pytest.raises(IndexError):
        CustomProduct(plane, [C1], 1).correction(2)


def test_correction_orders(plane):
    S = make_custom(plane, [moyal_correction(plane, 1), first_derivative_of_left(2)], 3)
    assert S.correction_orders() == [(0, 0, 0), (1, 1, 2), (1, 0, 1), None]


def test_star_power_associations(su2, x3):
    S = make_flexible(su2, 2)
    left = star_power(S, x3[0] + x3[1], 3, "left")
    right = star_power(S, x3[0] + x3[1], 3, "right")
    assert left.coefficient(0) == (x3[0] + x3[1]) ** 3
    assert right.coefficient(0) == left.coefficient(0)
    with pytest.raises(ValueError):
        star_power(S, x3[0], 0)
    with pytest.raises(ValueError):
        star_power(S, x3[0], 2, "middle")


def test_nilpotency_probe(plane):
    S = make_moyal(plane, 2)
    result = nilpotency_probe(S, X1 + X2, 2)
    assert result.status == PASS
    assert result.coefficient == (X1 + X2) ** 2

    lam_x2 = LambdaSeries.from_polynomial(X2, 2, 1)
    result = nilpotency_probe(S, lam_x2, 2)
    assert (result.status, result.expected_order) == (PASS, 2)

    result = nilpotency_probe(S, lam_x2, 3)
    assert result.status == INCONCLUSIVE
    assert result.to_dict()["coefficient"] is None

    with pytest.raises(PreconditionError):
        nilpotency_probe(S, Polynomial.zero(2), 2)


def test_nilpotency_probe_on_a_non_associative_product(plane):
    S = make_custom(plane, [moyal_correction(plane, 1), first_derivative_of_left(2)], 2)
    assert S.star(X1, X1).to_exprs() == ["x1^2", "0", "x1"]
    one = Polynomial.one(2)
    assert associator(S, X1, one, one).to_exprs() == ["0", "0", "-1"]
    result = nilpotency_probe(S, LambdaSeries.from_polynomial(X2 + 1, 2, 1), 2)
    assert result.status == PASS
    assert result.coefficient == (X2 + 1) ** 2
    for k in (2, 3):
        assert nilpotency_probe(S, X1, k).status == PASS


def test_nilpotency_probe_on_a_symplectic_plane_of_dimension_four(rng):
    P = symplectic(4)
    S = make_moyal(P, 3)
    f = random_polynomial(4, 2, rng)
    result = nilpotency_probe(S, LambdaSeries.from_polynomial(f, 3, 1), 3)
    assert result.status == PASS
    assert result.coefficient == f ** 3


def test_cross_check_lemma2(plane, rng):
    S = make_moyal(plane, 2)
    report = cross_check_lemma2(S, nilpotency_corpus(2, 2, rng, size=12))
    assert report.holds
    assert report.probes == report.passes + report.inconclusive
    assert report.probes > 12
    assert report.to_dict()["status"] == "pass"


def test_cross_check_lemma2_skips_zero(plane):
    S = make_moyal(plane, 2)
    report = cross_check_lemma2(S, [Polynomial.zero(2), X1], max_power=4)
    assert report.probes == 3
    assert report.passes == 3


def test_nilpotency_corpus_shape(rng):
    corpus = nilpotency_corpus(3, 2, rng, size=10)
    assert len(corpus) == 10
    assert corpus[0].to_exprs() == ["x1", "0", "0"]
    assert corpus[1].to_exprs() == ["1", "x2", "0"]
    assert corpus[2].to_exprs() == ["0", "0", "x3"]
    assert all(not element.is_zero for element in corpus)


def make_gauge(K):
    return GaugeTransform(2, [DiffOperator(2, {(2, 0): 1, (1, 0): X2}),
                              DiffOperator(2, {(0, 1): X1})], K)


def test_gauge_apply():
    D = make_gauge(2)
    value = D.apply(LambdaSeries.from_polynomial(X1 ** 2, 2))
    assert value.to_exprs() == ["x1^2", "2*x1*x2 + 2", "0"]
    assert D.layer_orders() == [0, 2, 1]


def test_gauge_inverse_composes_to_identity(rng):
    D = make_gauge(3)
    Dinv = D.inverse()
    for _ in range(5):
        f = LambdaSeries.from_polynomial(random_polynomial(2, 4, rng), 3)
        assert Dinv.apply(D.apply(f)) == f
        assert D.apply(Dinv.apply(f)) == f


def test_gauge_transform_keeps_the_bracket(plane, rng):
    S = make_moyal(plane, 2)
    T = gauge_transform(S, make_gauge(2))
    assert T.correction(1) != S.correction(1)
    assert T.correction(1).antisymmetrized() == S.correction(1).antisymmetrized()
    assert T.correction(1).antisymmetrized().apply(X1, X2) == bracket(plane, X1, X2)
    for _ in range(5):
        f, g, h = (random_polynomial(2, 3, rng) for _ in range(3))
        assert associator(T, f, g, h).is_zero


def test_gauge_transform_matches_conjugation(plane, rng):
    S = make_moyal(plane, 2)
    D = make_gauge(2)
    T = gauge_transform(S, D)
    Dinv = D.inverse()
    for _ in range(5):
        f, g = (random_polynomial(2, 3, rng) for _ in range(2))
        expected = Dinv.apply(S.star(D.apply(S.lift(f)), D.apply(S.lift(g))))
        assert T.star(f, g) == expected


def test_gauge_round_trip(plane):
    S = make_moyal(plane, 2)
    D = make_gauge(2)
    assert gauge_transform(gauge_transform(S, D), D.inverse()) == S


def test_identity_gauge_returns_the_product(plane):
    S = make_moyal(plane, 2)
    assert gauge_transform(S, GaugeTransform.identity(2, 2)) is S


def test_gauge_preconditions(plane):
    S = make_moyal(plane, 2)
    with pytest.raises(TruncationMismatchError):
        gauge_transform(S, make_gauge(3))
    with pytest.raises(DimensionMismatchError):
        gauge_transform(S, GaugeTransform(3, [DiffOperator(3, {(1, 0, 0): 1})], 2))
    with pytest.raises(PreconditionError):
        GaugeTransform(2, [DiffOperator(2)] * 3, 2)


def test_product_factory(plane, su2):
    assert isinstance(ProductFactory.create_product("moyal", plane, 2), MoyalProduct)
    assert isinstance(ProductFactory.create_product("Flexible", su2, 1), FlexibleProduct)
    custom = ProductFactory.create_product("custom", plane, 2,
                                           corrections=[moyal_correction(plane, 1)])
    assert custom.correction(1) == moyal_correction(plane, 1)
    assert custom.correction(2).is_empty
    gauged = ProductFactory.create_product("moyal", plane, 2, gauge=make_gauge(2))
    assert gauged.family == "gauge"
    with pytest.raises(ConfigError):
        ProductFactory.create_product("custom", plane, 2)
    with pytest.raises(ConfigError):
        ProductFactory.create_product("weyl", plane, 2)


@pytest.mark.parametrize("name", [
    "zero", "symplectic", "su2", "heisenberg",
    pytest.param("monopole", marks=pytest.mark.slow),
])
def test_flexible_product_is_always_flexible(name):
    assert check_flexible(make_flexible(BIVECTOR_CORPUS[name](), 2)).holds


@pytest.mark.parametrize("family", ["moyal", "flexible"])
def test_nilpotency_cross_check_on_a_full_corpus(family, rng):
    P = symplectic(2) if family == "moyal" else su2()
    S = ProductFactory.create_product(family, P, 2)
    report = cross_check_lemma2(S, nilpotency_corpus(P.dimension, 2, rng, size=50))
    assert report.holds
    assert report.passes > 0


@pytest.mark.slow
def test_gauge_contract_at_order_three(plane):
    S = make_moyal(plane, 3)
    D = make_gauge(3)
    T = gauge_transform(S, D)
    assert check_associative(T).holds
    assert T.correction(1).antisymmetrized() == S.correction(1).antisymmetrized()
    assert gauge_transform(T, D.inverse()) == S


def test_unitality_check(plane):
    assert unitality_check(make_moyal(plane, 2)).holds
    skewed = make_custom(plane, [moyal_correction(plane, 1), first_derivative_of_left(2)], 2)
    verdict = unitality_check(skewed)
    assert not verdict.holds
    assert verdict.witness.argument_dict() == {"f": X1}
