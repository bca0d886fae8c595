"""
Catalogue of the nearly associative identities NAQ can certify

Identities that are not linear in every argument are entered in polarized
form, which over the rationals is equivalent and is what makes the monomial
certificate complete. The squared sandwich identity and the linearized
Shestakov identity keep repeated arguments and are swept without a
completeness claim. A part whose defect cannot be nonzero below
lambda^lowest_order is skipped at smaller truncation orders.
"""
from __future__ import annotations

from dataclasses import dataclass

from naq.identities.expression import (Bracket, Dot, Jacobiator, Slot, Star, Unit,
                                       associator_expr, commutator_expr, jordan_expr,
                                       slot_names)

STAR = "star"
BRACKET = "bracket"


@dataclass(frozen=True)
class IdentityPart:
    name: str
    slots: tuple
    expression: object
    symmetric_pairs: tuple = ()
    complete: bool = True
    lowest_order: int = 0

    def __post_init__(self):
        if set(slot_names(self.expression)) != set(self.slots):
            raise ValueError(f"slots {self.slots} do not match the expression of {self.name}")


@dataclass(frozen=True)
class IdentitySpec:
    name: str
    level: str
    parts: tuple
    description: str = ""


f, g, h, k, d = (Slot(name) for name in ("f", "g", "h", "k", "d"))
r, s = Slot("r"), Slot("s")


def A(a, b, c):
    return associator_expr(a, b, c)


def _jordan(a, b):
    return jordan_expr(a, b)


def _comm(a, b):
    return commutator_expr(a, b)


ASSOCIATIVE = IdentitySpec("associative", STAR, (
    IdentityPart("associative", ("f", "g", "h"), A(f, g, h)),
), "A(f, g, h) = 0")

FLEXIBLE = IdentitySpec("flexible", STAR, (
    IdentityPart("flexible", ("f", "g", "h"), A(f, g, h) + A(h, g, f), (("f", "h"),)),
), "A(f, g, f) = 0, polarized")

RIGHT_ALTERNATIVE_PART = IdentityPart(
    "right_alternative", ("f", "g", "h"), A(f, g, h) + A(f, h, g), (("g", "h"),))

LEFT_ALTERNATIVE_PART = IdentityPart(
    "left_alternative", ("f", "g", "h"), A(f, g, h) + A(g, f, h), (("f", "g"),))

# ((f*g)*h)*g = f*((g*h)*g), polarized in g
RIGHT_MOUFANG_PART = IdentityPart(
    "right_moufang", ("f", "g", "h", "k"),
    Star(Star(Star(f, g), h), k) + Star(Star(Star(f, k), h), g)
    - Star(f, Star(Star(g, h), k)) - Star(f, Star(Star(k, h), g)),
    (("g", "k"),))

RIGHT_ALTERNATIVE = IdentitySpec("right_alternative", STAR, (
    RIGHT_ALTERNATIVE_PART, RIGHT_MOUFANG_PART,
), "A(f, g, g) = 0 and the right Moufang identity")

ALTERNATIVE = IdentitySpec("alternative", STAR, (
    LEFT_ALTERNATIVE_PART, RIGHT_ALTERNATIVE_PART,
), "associator totally antisymmetric")

g1, g2, h1, h2 = (Slot(name) for name in ("g1", "g2", "h1", "h2"))

# [g,h] starts at lambda^1 and A has no lambda^0 part, so A([g,h]^2, r, s) starts
# at lambda^3 and its square at lambda^6
_square = Star(_comm(g, h), _comm(g, h))
_sandwich = A(_square, r, s)
_polarized_square = (Star(_comm(g1, h1), _comm(g2, h2)) + Star(_comm(g2, h2), _comm(g1, h1))
                     + Star(_comm(g1, h2), _comm(g2, h1)) + Star(_comm(g2, h1), _comm(g1, h2)))

SANDWICH = IdentitySpec("sandwich", STAR, (
    IdentityPart("sandwich", ("g1", "g2", "h1", "h2", "r", "s"), A(_polarized_square, r, s),
                 (("g1", "g2"), ("h1", "h2")), lowest_order=3),
    IdentityPart("sandwich_squared", ("g", "h", "r", "s"), Star(_sandwich, _sandwich),
                 complete=False, lowest_order=6),
), "A([g,h]^2, r, s) = 0, polarized in g and h, and its square")

MOUFANG = IdentitySpec("moufang", STAR, (
    RIGHT_MOUFANG_PART,
), "((f*g)*h)*g = f*((g*h)*g)")

COMMUTATOR_DERIVATION = IdentitySpec("commutator_derivation", STAR, (
    IdentityPart("commutator_derivation", ("f", "g", "h"),
                 _comm(f, _jordan(g, h)) - _jordan(_comm(f, g), h) - _jordan(g, _comm(f, h)),
                 (("g", "h"),)),
), "[f, g o h] = [f, g] o h + g o [f, h]")

UNITALITY = IdentitySpec("unitality", STAR, (
    IdentityPart("unitality_left", ("f",), Star(Unit(), f) - f),
    IdentityPart("unitality_right", ("f",), Star(f, Unit()) - f),
), "1 * f = f * 1 = f")

# {h,f,{h,g}} = {{h,f,g},h}, polarized in h
MALCEV = IdentitySpec("malcev", BRACKET, (
    IdentityPart("malcev", ("f", "g", "h1", "h2"),
                 Jacobiator(h1, f, Bracket(h2, g)) + Jacobiator(h2, f, Bracket(h1, g))
                 - Bracket(Jacobiator(h1, f, g), h2) - Bracket(Jacobiator(h2, f, g), h1),
                 (("h1", "h2"),)),
), "Malcev identity, polarized")

f1, f2 = Slot("f1"), Slot("f2")

# {f,g,h}.{f,g} = 0, polarized in f and g; then its partial linearization
SHESTAKOV = IdentitySpec("shestakov", BRACKET, (
    IdentityPart("shestakov", ("f1", "f2", "g1", "g2", "h"),
                 Dot(Jacobiator(f1, g1, h), Bracket(f2, g2))
                 + Dot(Jacobiator(f1, g2, h), Bracket(f2, g1))
                 + Dot(Jacobiator(f2, g1, h), Bracket(f1, g2))
                 + Dot(Jacobiator(f2, g2, h), Bracket(f1, g1)),
                 (("f1", "f2"), ("g1", "g2"))),
    IdentityPart("shestakov_linearized", ("f", "g", "d", "h"),
                 Dot(Jacobiator(f, g, h), Bracket(f, d)) + Dot(Jacobiator(f, d, h), Bracket(f, g)),
                 (("g", "d"),), complete=False),
), "{f,g,h}.{f,g} = 0 and its linearization")

CATALOGUE = {spec.name: spec for spec in (
    ASSOCIATIVE, FLEXIBLE, RIGHT_ALTERNATIVE, MOUFANG, ALTERNATIVE, SANDWICH,
    COMMUTATOR_DERIVATION, UNITALITY, MALCEV, SHESTAKOV,
)}

STAR_CHECKS = tuple(name for name, spec in CATALOGUE.items() if spec.level == STAR)
BRACKET_CHECKS = tuple(name for name, spec in CATALOGUE.items() if spec.level == BRACKET)


def get_identity(name):
    try:
        return CATALOGUE[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(CATALOGUE)}") from None
