"""
Bracket diagnostics: Jacobi, Malcev and Shestakov checks of a bivector

A bracket that fails the Jacobi identity also fails the Malcev identity. The
witness builder below reproduces that implication concretely: it picks a point
and covectors where J does not vanish and shows that the Shestakov identity or
its linearization is violated there by linear functions.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from naq.algebra.polynomial import Polynomial
from naq.identities.checks import check_identity
from naq.poisson.bivector import Covector, bracket, contract_bivector_at
from naq.poisson.jacobiator import contract_jacobiator_at, jacobiator_fn, jacobiator_tensor

logger = logging.getLogger(__name__)

HOLDS = "holds"
FAILS = "fails"


@dataclass(frozen=True)
class JacobiVerdict:
    status: str
    indices: tuple | None = None
    point: tuple | None = None
    value: Fraction | None = None
    entry: Polynomial | None = None

    @property
    def holds(self):
        return self.status == HOLDS

    def to_dict(self):
        if self.holds:
            return {"status": self.status, "witness": None}
        return {
            "status": self.status,
            "witness": {
                "indices": [i + 1 for i in self.indices],
                "entry": self.entry.to_expr(),
                "point": [str(c) for c in self.point],
                "value": str(self.value),
            },
        }


def nonzero_point(poly):
    """First point of {0..d}^n in lexicographic order where ``poly`` is nonzero

    A nonzero polynomial of degree d cannot vanish on the whole grid.
    """
    if poly.is_zero:
        return None
    for point in product(range(poly.degree + 1), repeat=poly.dimension):
        value = poly.evaluate(point)
        if value != 0:
            return tuple(Fraction(c) for c in point), value
    raise AssertionError(f"{poly.to_expr()} vanishes on its degree grid")


def jacobi_check(P, tensor=None):
    """Check that every Jacobiator entry J^ijk, i < j < k, is the zero polynomial

    Returns:
        JacobiVerdict: on failure, the first nonzero entry (0-based indices) and a
        rational point where it does not vanish
    """
    if tensor is None:
        tensor = jacobiator_tensor(P)
    entries = tensor.independent_entries()
    if not entries:
        logger.info(f"Jacobi identity holds for {P.name} bivector")
        return JacobiVerdict(HOLDS)
    i, j, k, entry = entries[0]
    point, value = nonzero_point(entry)
    logger.info(f"Jacobi identity fails for {P.name} bivector: "
                f"J^{i + 1}{j + 1}{k + 1} = {entry.to_expr()}")
    return JacobiVerdict(FAILS, (i, j, k), point, value, entry)


def malcev_check(P, degree_bound=None, threads=1):
    """Certificate check of the polarized Malcev identity on monomial tuples"""
    return check_identity("malcev", bivector=P, degree_override=degree_bound, threads=threads)


def shestakov_check(P, degree_bound=None, threads=1):
    """Certificate check of the polarized Shestakov identity and its linearization"""
    return check_identity("shestakov", bivector=P, degree_override=degree_bound, threads=threads)


def nonvanishing_on_dense_set(P):
    """A polynomial bivector is nonzero on a dense set iff it is not identically zero"""
    return not P.is_zero


def linear_function(covector, point):
    """The function v(x - x0) as a Polynomial"""
    n = len(covector)
    result = Polynomial.zero(n)
    for axis, (c, x) in enumerate(zip(covector.components, point)):
        if c:
            result += (Polynomial.variable(n, axis) - x) * c
    return result


@dataclass(frozen=True)
class Lemma1Witness:
    """Linear functions through x0 violating the Shestakov identity or its linearization"""
    identity: str
    point: tuple
    covectors: tuple
    functions: dict
    value: Fraction
    jacobiator_contraction: Fraction
    bivector_contraction: Fraction
    consistent: bool

    def to_dict(self):
        return {
            "identity": self.identity,
            "point": [str(c) for c in self.point],
            "covectors": [[str(c) for c in v.components] for v in self.covectors],
            "functions": {name: f.to_expr() for name, f in self.functions.items()},
            "value": str(self.value),
            "jacobiator_contraction": str(self.jacobiator_contraction),
            "bivector_contraction": str(self.bivector_contraction),
            "consistent": self.consistent,
        }


def _shestakov_values(P, f, g, h, d, x0):
    jac_fgh = jacobiator_fn(P, f, g, h)
    plain = (jac_fgh * bracket(P, f, g)).evaluate(x0)
    linearized = (jac_fgh * bracket(P, f, d)
                  + jacobiator_fn(P, f, d, h) * bracket(P, f, g)).evaluate(x0)
    return plain, linearized


def lemma1_witness(P, tensor=None):
    """Point, covectors and linear functions exposing a non-Malcev bracket

    With f, g, h, d linear through x0 along v1, v2, v3, v4, {f,g,h}(x0) is
    J(x0)(v1,v2,v3) and {f,g}(x0) is P(x0)(v1,v2). When the latter vanishes the
    linearized identity reduces to J(x0)(v1,v2,v3) P(x0)(v1,v4).

    Returns:
        Lemma1Witness or None: None when the Jacobi identity holds, or when no
        axis-aligned configuration at the Jacobi witness point works
    """
    if tensor is None:
        tensor = jacobiator_tensor(P)
    verdict = jacobi_check(P, tensor)
    if verdict.holds:
        return None
    n = P.dimension
    x0 = verdict.point
    axes = [Covector.basis(n, a) for a in verdict.indices]
    for v1, v2, v3 in permutations(axes):
        j_value = Fraction(contract_jacobiator_at(P, x0, v1, v2, v3, tensor))
        if j_value == 0:
            continue
        f, g, h = (linear_function(v, x0) for v in (v1, v2, v3))
        p12 = Fraction(contract_bivector_at(P, x0, v1, v2))
        if p12 != 0:
            plain, _ = _shestakov_values(P, f, g, h, g, x0)
            return _witness("shestakov", P, x0, (v1, v2, v3), {"f": f, "g": g, "h": h},
                            plain, j_value, p12, j_value * p12)
        for axis in range(n):
            v4 = Covector.basis(n, axis)
            p14 = Fraction(contract_bivector_at(P, x0, v1, v4))
            if p14 == 0:
                continue
            d = linear_function(v4, x0)
            _, linearized = _shestakov_values(P, f, g, h, d, x0)
            return _witness("shestakov_linearized", P, x0, (v1, v2, v3, v4),
                            {"f": f, "g": g, "h": h, "d": d}, linearized, j_value, p14,
                            j_value * p14)
    logger.warning(f"No Shestakov witness found at {x0} for {P.name} bivector")
    return None


def _witness(identity, P, x0, covectors, functions, value, j_value, p_value, predicted):
    consistent = value == predicted and value != 0
    if not consistent:
        logger.error(f"Shestakov witness for {P.name} bivector evaluates to {value}, "
                     f"contractions predict {predicted}")
    return Lemma1Witness(identity, x0, covectors, functions, value, j_value, p_value, consistent)
