"""
Expression parser for polynomials and star-product expressions

Grammar (whitespace is ignored, implicit multiplication is not allowed):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := ('-' | '+') factor | power
    power    := atom ('^' integer)*
    atom     := number | call | name | '(' expr ')'
    number   := digits ['/' digits]

For polynomials ``*`` is the pointwise product and names are x1..xn. For star
expressions ``*`` is the star product, ``^`` a left-associated star power,
``lam`` the formal parameter, and the functions dot, comm, assoc, bracket and
jordan are available.
"""
from __future__ import annotations

import logging
from fractions import Fraction

import pyparsing

from naq.algebra.polynomial import Polynomial
from naq.algebra.series import LambdaSeries
from naq.core.errors import ExpressionParseError
from naq.core.products.base_product import associator, commutator, jordan, star, star_power
from naq.poisson.bivector import bracket_series

logger = logging.getLogger(__name__)

pyparsing.ParserElement.enable_packrat()


def _variable_axis(name, dimension):
    if name.startswith("x") and name[1:].isdigit():
        index = int(name[1:])
        if 1 <= index <= dimension:
            return index - 1
    return None


class PolynomialAlgebra:
    """Evaluation rules for plain polynomial expressions"""

    functions = {}

    def __init__(self, dimension):
        self.dimension = dimension

    def number(self, value):
        return value

    def name(self, name, position):
        axis = _variable_axis(name, self.dimension)
        if axis is None:
            raise ExpressionParseError(f"unknown variable {name!r}", position)
        return Polynomial.variable(self.dimension, axis)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def power(self, a, exponent):
        return a ** exponent

    def call(self, name, arguments, position):
        raise ExpressionParseError(f"unknown function {name!r}", position)

    def finish(self, value):
        if isinstance(value, Polynomial):
            return value
        return Polynomial.constant(self.dimension, value)


class _Scalar:
    """Element of Q[lambda] acting by scaling rather than by the star product"""

    __slots__ = ("series",)

    def __init__(self, series):
        self.series = series


class StarAlgebra:
    """Evaluation rules for star expressions over a fixed product"""

    def __init__(self, product):
        self.product = product
        self.dimension = product.dimension
        self.truncation_order = product.truncation_order
        self.functions = {
            "dot": (2, lambda a, b: a.pointwise_mul(b)),
            "comm": (2, lambda a, b: commutator(product, a, b)),
            "assoc": (3, lambda a, b, c: associator(product, a, b, c)),
            "bracket": (2, lambda a, b: bracket_series(product.source_bivector, a, b)),
            "jordan": (2, lambda a, b: jordan(product, a, b)),
        }

    def _series(self, value):
        return value.series if isinstance(value, _Scalar) else value

    def number(self, value):
        constant = Polynomial.constant(self.dimension, value)
        return _Scalar(LambdaSeries.constant(constant, self.truncation_order))

    def name(self, name, position):
        if name == "lam":
            return _Scalar(LambdaSeries.lam(self.dimension, self.truncation_order))
        axis = _variable_axis(name, self.dimension)
        if axis is None:
            raise ExpressionParseError(f"unknown variable {name!r}", position)
        variable = Polynomial.variable(self.dimension, axis)
        return LambdaSeries.constant(variable, self.truncation_order)

    def add(self, a, b):
        total = self._series(a) + self._series(b)
        both = isinstance(a, _Scalar) and isinstance(b, _Scalar)
        return _Scalar(total) if both else total

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if isinstance(a, _Scalar):
            return _Scalar(-a.series)
        return -a

    def mul(self, a, b):
        if isinstance(a, _Scalar) or isinstance(b, _Scalar):
            result = self._series(a).pointwise_mul(self._series(b))
            both = isinstance(a, _Scalar) and isinstance(b, _Scalar)
            return _Scalar(result) if both else result
        return star(self.product, a, b)

    def power(self, a, exponent):
        if isinstance(a, _Scalar):
            result = LambdaSeries.constant(Polynomial.one(self.dimension), self.truncation_order)
            for _ in range(exponent):
                result = result.pointwise_mul(a.series)
            return _Scalar(result)
        if exponent == 0:
            return LambdaSeries.constant(Polynomial.one(self.dimension), self.truncation_order)
        return star_power(self.product, a, exponent, "left")

    def call(self, name, arguments, position):
        if name not in self.functions:
            raise ExpressionParseError(f"unknown function {name!r}", position)
        arity, function = self.functions[name]
        if len(arguments) != arity:
            raise ExpressionParseError(
                f"{name} takes {arity} arguments, got {len(arguments)}", position)
        return function(*(self._series(a) for a in arguments))

    def finish(self, value):
        return self._series(value)


def _build_grammar(algebra):
    expr = pyparsing.Forward()
    lpar = pyparsing.Suppress("(")
    rpar = pyparsing.Suppress(")")

    number = pyparsing.Regex(r"\d+(?:\s*/\s*\d+)?")
    identifier = pyparsing.Regex(r"[A-Za-z_][A-Za-z0-9_]*")
    exponent = pyparsing.Regex(r"-?\d+")

    def on_number(text, loc, tokens):
        numerator, _, denominator = tokens[0].partition("/")
        if denominator and int(denominator) == 0:
            raise ExpressionParseError("division by zero", loc)
        return algebra.number(Fraction(int(numerator), int(denominator or 1)))

    def on_name(text, loc, tokens):
        return algebra.name(tokens[0], loc)

    call = (identifier + lpar + pyparsing.Group(pyparsing.DelimitedList(expr)) + rpar)

    def on_call(text, loc, tokens):
        return algebra.call(tokens[0], list(tokens[1]), loc)

    number.set_parse_action(on_number)
    call.set_parse_action(on_call)
    name = identifier.copy().set_parse_action(on_name)

    atom = number | call | name | (lpar + expr + rpar)

    power = atom + pyparsing.ZeroOrMore(pyparsing.Literal("^") + exponent)

    def on_power(text, loc, tokens):
        value = tokens[0]
        for index in range(2, len(tokens), 2):
            k = int(tokens[index])
            if k < 0:
                raise ExpressionParseError("negative exponent", text.find("^", loc))
            value = algebra.power(value, k)
        return value

    power.set_parse_action(on_power)

    factor = pyparsing.Forward()
    signed = pyparsing.one_of("+ -") + factor

    def on_signed(text, loc, tokens):
        return algebra.neg(tokens[1]) if tokens[0] == "-" else tokens[1]

    signed.set_parse_action(on_signed)
    factor <<= signed | power

    term = factor + pyparsing.ZeroOrMore(pyparsing.Literal("*") + factor)

    def on_term(text, loc, tokens):
        value = tokens[0]
        for index in range(2, len(tokens), 2):
            value = algebra.mul(value, tokens[index])
        return value

    term.set_parse_action(on_term)

    expr <<= term + pyparsing.ZeroOrMore(pyparsing.one_of("+ -") + term)

    def on_expr(text, loc, tokens):
        value = tokens[0]
        for index in range(1, len(tokens), 2):
            if tokens[index] == "+":
                value = algebra.add(value, tokens[index + 1])
            else:
                value = algebra.sub(value, tokens[index + 1])
        return value

    expr.set_parse_action(on_expr)
    return expr


def _parse(text, algebra):
    if not isinstance(text, str):
        raise ExpressionParseError(f"expected an expression string, got {type(text).__name__}", 0)
    grammar = _build_grammar(algebra)
    try:
        result = grammar.parse_string(text, parse_all=True)
    except pyparsing.ParseException as e:
        raise ExpressionParseError(f"syntax error: {e.msg}", e.loc) from e
    return algebra.finish(result[0])


def parse_poly_expr(text, dimension):
    """Parse a polynomial in x1..xn with rational coefficients

    Raises:
        ExpressionParseError: on syntax errors, unknown variables or negative exponents
    """
    return _parse(text, PolynomialAlgebra(dimension))


def parse_star_expr(text, product):
    """Evaluate a star expression such as ``assoc(x1, x2, x1^2) - lam*x3`` to a series"""
    logger.debug(f"Evaluating star expression {text!r}")
    return _parse(text, StarAlgebra(product))
