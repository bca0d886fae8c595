from fractions import Fraction

import pytest

from naq.algebra.polynomial import Polynomial
from naq.core.errors import ExpressionParseError
from naq.core.products.flexible_product import make_flexible
from naq.core.products.moyal_product import make_moyal
from naq.utils.expr_parser import parse_poly_expr, parse_star_expr


@pytest.mark.parametrize("text, expected", [
    ("x1*x2 - 1/2*x3^2", "x1*x2 - 1/2*x3^2"),
    ("(x1 + x2)^2", "x1^2 + 2*x1*x2 + x2^2"),
    ("-x1 + 2", "-x1 + 2"),
    ("+x3", "x3"),
    ("3/6", "1/2"),
    ("2 * x1 * 3", "6*x1"),
    ("x1^0", "1"),
    ("x2 - x2", "0"),
    ("- (x1 - x2)", "-x1 + x2"),
])
def test_parse_polynomials(text, expected):
    assert parse_poly_expr(text, 3).to_expr() == expected


def test_parse_constant_is_a_polynomial():
    value = parse_poly_expr("7/3", 2)
    assert isinstance(value, Polynomial)
    assert value.constant_value() == Fraction(7, 3)


@pytest.mark.parametrize("text, position", [
    ("x1 + x9", 5),
    ("2x1", 1),
    ("x1 +", 3),
    ("lam * x1", 0),
    ("dot(x1, x2)", 0),
])
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(ExpressionParseError) as excinfo:
        parse_poly_expr(text, 3)
    assert excinfo.value.position == position


def test_parse_rejects_negative_exponents_and_zero_denominators():
    with pytest.raises(ExpressionParseError, match="negative exponent"):
        parse_poly_expr("x1^-2", 2)
    with pytest.raises(ExpressionParseError, match="division by zero"):
        parse_poly_expr("1/0", 2)
    with pytest.raises(ExpressionParseError):
        parse_poly_expr(None, 2)


@pytest.mark.parametrize("text, expected", [
    ("x1*x2 - x2*x1", ["0", "2", "0"]),
    ("bracket(x1, x2)", ["1", "0", "0"]),
    ("x1^2", ["x1^2", "0", "0"]),
    ("lam*x1", ["0", "x1", "0"]),
    ("(1 + lam)^2", ["1", "2", "1"]),
    ("comm(x1, x2)", ["0", "2", "0"]),
    ("jordan(x1, x2)", ["2*x1*x2", "0", "0"]),
    ("dot(x1, x2) - x1*x2", ["0", "-1", "0"]),
    ("assoc(x1^2, x2, x1*x2)", ["0", "0", "0"]),
    ("x2^0", ["1", "0", "0"]),
    ("3/2", ["3/2", "0", "0"]),
])
def test_star_expressions_for_moyal(plane, text, expected):
    S = make_moyal(plane, 2)
    assert parse_star_expr(text, S).to_exprs() == expected


def test_star_expressions_for_flexible(su2):
    S = make_flexible(su2, 2)
    assert parse_star_expr("assoc(x1, x1, x2)", S).to_exprs() == ["0", "0", "-x2"]
    assert parse_star_expr("x1*x2 - lam*x3", S).to_exprs() == ["x1*x2", "0", "0"]


@pytest.mark.parametrize("text", [
    "assoc(x1, x2)",
    "foo(x1)",
    "x3",
    "x1 * * x2",
])
def test_star_expression_errors(plane, text):
    with pytest.raises(ExpressionParseError):
        parse_star_expr(text, make_moyal(plane, 2))
