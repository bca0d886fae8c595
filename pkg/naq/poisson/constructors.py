"""
Named bivector families and the factory that builds them from configuration
"""
from __future__ import annotations

import logging

from naq.algebra.polynomial import Polynomial, to_fraction
from naq.core.errors import ConfigError, DimensionMismatchError, NaqError, PreconditionError
from naq.poisson.bivector import Bivector
from naq.utils.expr_parser import parse_poly_expr

logger = logging.getLogger(__name__)

# Levi-Civita symbol on three indices, nonzero entries only
LEVI_CIVITA = {
    (0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1,
    (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1,
}


def _as_polynomial(value, dimension):
    if isinstance(value, Polynomial):
        if value.dimension != dimension:
            raise DimensionMismatchError(
                f"polynomial of dimension {value.dimension}, expected {dimension}")
        return value
    if isinstance(value, str):
        return parse_poly_expr(value, dimension)
    return Polynomial.constant(dimension, to_fraction(value))


def constant(matrix):
    """Constant bivector from a square matrix of rationals"""
    n = len(matrix)
    return Bivector([[Polynomial.constant(n, to_fraction(v)) for v in row] for row in matrix],
                    name="constant")


def symplectic(dimension):
    """Canonical symplectic bivector, {x_i, x_(i+n/2)} = 1"""
    if dimension < 2 or dimension % 2:
        raise PreconditionError(f"symplectic bivector needs an even dimension, got {dimension}")
    half = dimension // 2
    return Bivector.from_upper(dimension, {(i, i + half): 1 for i in range(half)},
                               name="symplectic")


def linear(structure_constants):
    """Linear bivector P^ij = c^ij_k x_k from an n x n x n array of rationals"""
    n = len(structure_constants)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            constants = structure_constants[i][j]
            if len(constants) != n:
                raise DimensionMismatchError(
                    f"structure constants c^{i + 1}{j + 1} need {n} entries")
            row.append(Polynomial.from_terms(n, {
                tuple(1 if m == k else 0 for m in range(n)): to_fraction(c)
                for k, c in enumerate(constants)}))
        rows.append(row)
    return Bivector(rows, name="linear")


def su2():
    """The Lie-Poisson bivector of su(2), P^ij = eps^ijk x_k on R^3"""
    upper = {}
    for (i, j, k), sign in LEVI_CIVITA.items():
        if i < j:
            upper[(i, j)] = Polynomial.variable(3, k).scale(sign)
    return Bivector.from_upper(3, upper, name="su2")


def heisenberg():
    """Heisenberg Lie-Poisson bivector on R^3, {x1, x2} = x3"""
    return Bivector.from_upper(3, {(0, 1): Polynomial.variable(3, 2)}, name="heisenberg")


def monopole(field=None):
    """Phase-space bivector of a charge in a magnetic field B(x) on R^6

    Coordinates are x1..x3 (positions) and x4..x6 (momenta p1..p3), with
    {x_i, p_j} = delta_ij and {p_i, p_j} = eps_ijk B_k(x). The default field is
    B = x, whose Jacobiator is -div B = -3.
    """
    if field is None:
        field = [Polynomial.variable(6, k) for k in range(3)]
    field = [_as_polynomial(b, 6) for b in field]
    if len(field) != 3:
        raise PreconditionError(f"magnetic field needs 3 components, got {len(field)}")
    upper = {(i, 3 + i): Polynomial.one(6) for i in range(3)}
    for (i, j, k), sign in LEVI_CIVITA.items():
        if i < j:
            upper[(3 + i, 3 + j)] = field[k].scale(sign)
    return Bivector.from_upper(6, upper, name="monopole")


def custom(matrix):
    """Bivector from a square matrix of Polynomials, expression strings or rationals"""
    n = len(matrix)
    return Bivector([[_as_polynomial(v, n) for v in row] for row in matrix], name="custom")


def zero(dimension):
    return Bivector.from_upper(dimension, {}, name="zero")


class BivectorFactory:
    """Factory for bivectors described by a configuration section"""

    KINDS = ("constant", "symplectic", "linear", "su2", "heisenberg", "monopole", "custom", "zero")

    @staticmethod
    def create_bivector(section, dimension):
        """Create the bivector named by ``section['kind']``

        Args:
            section (dict): bivector configuration section
            dimension (int): ambient dimension of the session

        Returns:
            Bivector: the constructed bivector, checked against ``dimension``
        """
        kind = str(section.get("kind", "")).lower()
        logger.info(f"Creating {kind} bivector")
        try:
            bivector = BivectorFactory._build(kind, section, dimension)
        except NaqError:
            raise
        except KeyError as e:
            raise ConfigError(f"{kind} bivector section is missing {e}") from e
        except (IndexError, TypeError, ValueError) as e:
            raise ConfigError(f"malformed {kind} bivector section: {e}") from e
        if bivector.dimension != dimension:
            raise ConfigError(
                f"{kind} bivector has dimension {bivector.dimension}, session dimension is {dimension}")
        return bivector

    @staticmethod
    def _build(kind, section, dimension):
        if kind == "constant":
            bivector = constant(section["matrix"])
        elif kind == "symplectic":
            bivector = symplectic(dimension)
        elif kind == "linear":
            bivector = linear(section["structure_constants"])
        elif kind == "su2":
            bivector = su2()
        elif kind == "heisenberg":
            bivector = heisenberg()
        elif kind == "monopole":
            bivector = monopole(section.get("field"))
        elif kind == "custom":
            bivector = custom(section["matrix"])
        elif kind == "zero":
            bivector = zero(dimension)
        else:
            raise ConfigError(f"Unknown bivector kind: {kind!r}")
        return bivector
