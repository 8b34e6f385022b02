"""
Seeded random elements for the property suites.

Every sampler takes an explicit ``random.Random`` so a run is reproducible from its seed.
"""
import random
from fractions import Fraction
from typing import List

from core.amalgam import AmalgamElement, AmalgamInstance, alt_word
from core.rings import BaseRing
from core.scalars import (LAURENT, PRIME, RATFUNC, Flavor, LaurentScalar,
                          ParameterSet, ParamScalar)
from core.torus import QuantumTorus, TorusElement
from core.words import WordElement


def random_fraction(rng: random.Random, size: int = 5) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, 3))


def random_laurent(rng: random.Random, max_terms: int = 3, exp_range: int = 2) -> LaurentScalar:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(-exp_range, exp_range), rng.randint(-exp_range, exp_range))
        terms[key] = random_fraction(rng)
    return LaurentScalar(terms)


def random_ratfunc(rng: random.Random, flavor: Flavor, degree: int = 2) -> ParamScalar:
    """num/den with small integer coefficients; den is 1, a power of s, or s - c."""
    s = flavor.generator("s")
    num = flavor.zero()
    for k in range(degree + 1):
        num = num + flavor.from_int(rng.randint(-3, 3)) * s ** k
    shape = rng.choice(("one", "power", "linear"))
    if shape == "power":
        den = s ** rng.randint(1, 2)
    elif shape == "linear":
        den = s - flavor.from_int(rng.randint(-2, 2))
    else:
        den = flavor.one()
    if den.is_zero():
        den = flavor.one()
    return num / den


def random_coefficient(rng: random.Random, flavor: Flavor) -> ParamScalar:
    if flavor.kind == LAURENT:
        return random_laurent(rng, max_terms=2, exp_range=1)
    if flavor.kind == RATFUNC:
        return random_ratfunc(rng, flavor)
    if flavor.kind == PRIME:
        return flavor.from_int(rng.randint(0, flavor.p - 1))
    return flavor.from_fraction(random_fraction(rng))


def random_torus(rng: random.Random, torus: QuantumTorus, max_terms: int = 4,
                 exp_range: int = 3) -> TorusElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(-exp_range, exp_range) for _ in range(3))
        terms[exps] = random_coefficient(rng, torus.flavor)
    return TorusElement(torus, terms)


def random_ring_element(rng: random.Random, ring: BaseRing):
    """Small elements: at most two torus terms, or a low-degree rational function."""
    if isinstance(ring, QuantumTorus):
        return random_torus(rng, ring, max_terms=2, exp_range=1)
    return random_ratfunc(rng, ring.flavor, degree=1)


def _nonzero(rng: random.Random, ring: BaseRing):
    for _ in range(20):
        r = random_ring_element(rng, ring)
        if not r.is_zero():
            return r
    return ring.one()


def random_amalgam(rng: random.Random, instance: AmalgamInstance, degree: int) -> AmalgamElement:
    """An element of exact degree ``degree`` with sparse lower terms."""
    ring = instance.ring
    terms = {}
    if rng.random() < 0.7:
        terms[""] = random_ring_element(rng, ring)
    for i in range(1, degree + 1):
        for first in ("x", "y"):
            if rng.random() < 0.5:
                terms[alt_word(first, i)] = random_ring_element(rng, ring)
    if degree == 0:
        terms[""] = _nonzero(rng, ring)
    elif all(terms.get(alt_word(first, degree), ring.zero()).is_zero() for first in ("x", "y")):
        terms[alt_word(rng.choice(("x", "y")), degree)] = _nonzero(rng, ring)
    return AmalgamElement(instance, terms)


def random_word(rng: random.Random, max_len: int) -> str:
    return "".join(rng.choice("xy") for _ in range(rng.randint(0, max_len)))


def random_word_element(rng: random.Random, ring: BaseRing, max_len: int = 3,
                        max_terms: int = 3) -> WordElement:
    """An element of the free product S on arbitrary (not necessarily alternating) words."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_word(rng, max_len)] = _nonzero(rng, ring)
    return WordElement(ring, terms)


def random_generator_list(rng: random.Random, instance: AmalgamInstance, max_count: int = 3,
                          max_degree: int = 3) -> List[AmalgamElement]:
    return [random_amalgam(rng, instance, rng.randint(0, max_degree))
            for _ in range(rng.randint(1, max_count))]


def random_specialization(rng: random.Random, p: int = 0) -> ParameterSet:
    """Nonzero q and h over Q, or over F_p with p odd."""
    if p:
        return ParameterSet.specialized(rng.randint(1, p - 1), rng.randint(1, p - 1), p)
    q = Fraction(rng.choice((-3, -2, 2, 3, 5)), rng.randint(1, 2))
    h = Fraction(rng.choice((-2, 2, 3, 4)), rng.randint(1, 3))
    return ParameterSet.specialized(q, h)
