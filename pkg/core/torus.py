"""
The quantum torus on invertible z1, z2, z3 with z1 z2 = z2 z1 and z_i z3 = q^-1 z3 z_i.

Elements are written z1^a z2^b z3^c with the coefficient on the left. Moving z3^c
to the right past z1^a' z2^b' costs q^(c(a'+b')).
"""
from fractions import Fraction
from typing import Dict, List, Tuple

from core.errors import (ContextMismatchError, NonDivisibleError,
                         UndefinedEndomorphismError,
                         NotInvertibleError)
from core.rings import QUANTUM_TORUS, BaseRing, BaseRingDescriptor
from core.scalars import ParameterSet, ParamScalar

Exponent = Tuple[int, int, int]
Unit = Tuple[ParamScalar, Exponent]

GENERATOR_EXPONENTS = {
    "z1": (1, 0, 0),
    "z2": (0, 1, 0),
    "z3": (0, 0, 1),
}


def _monomial_text(exps: Exponent) -> str:
    factors = []
    for name, e in zip(("z1", "z2", "z3"), exps):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


class TorusElement:
    """Finite map from exponent vectors to nonzero scalars."""

    __slots__ = ("torus", "terms")

    def __init__(self, torus: "QuantumTorus", terms: Dict[Exponent, ParamScalar]):
        self.torus = torus
        cleaned = {}
        for exps, coeff in terms.items():
            if not coeff.is_zero():
                cleaned[tuple(exps)] = coeff
        self.terms = tuple(sorted(cleaned.items(), key=lambda item: item[0], reverse=True))

    def as_dict(self) -> Dict[Exponent, ParamScalar]:
        return dict(self.terms)

    #################### ARITHMETIC ####################
    def _coerce(self, other):
        if isinstance(other, TorusElement):
            if other.torus != self.torus:
                raise ContextMismatchError("torus elements from different parameter contexts")
            return other
        if isinstance(other, (int, Fraction, ParamScalar)) and not isinstance(other, bool):
            return self.torus.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        total = self.as_dict()
        for exps, coeff in other.terms:
            total[exps] = total[exps] + coeff if exps in total else coeff
        return TorusElement(self.torus, total)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement(self.torus, {e: -c for e, c in self.terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.torus.torus_mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.torus.torus_mul(other, self)

    def __pow__(self, exponent: int):
        base = self if exponent >= 0 else self.inverse()
        result = self.torus.one()
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ParamScalar)) and not isinstance(other, bool):
            other = self.torus.scalar(other)
        if not isinstance(other, TorusElement) or other.torus != self.torus:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"TorusElement({self.text()})"

    def __str__(self):
        return self.text()

    #################### PREDICATES ####################
    def is_zero(self) -> bool:
        return not self.terms

    def is_single_term(self) -> bool:
        if len(self.terms) != 1:
            return len(self.terms) == 0
        exps, coeff = self.terms[0]
        return coeff.is_single_term()

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and self.terms[0][1].is_unit()

    def inverse(self) -> "TorusElement":
        if not self.is_unit():
            raise NotInvertibleError(f"{self.text()} is not a unit of the quantum torus")
        exps, coeff = self.terms[0]
        unit = self.torus._unit_pow((coeff, exps), -1)
        return self.torus.from_unit(unit)

    def scalar_part(self) -> ParamScalar:
        return self.as_dict().get((0, 0, 0), self.torus.flavor.zero())

    def leading(self) -> Tuple[Exponent, ParamScalar]:
        return self.terms[0]

    #################### TEXT ####################
    def text(self) -> str:
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for exps, coeff in self.terms:
            mono = _monomial_text(exps)
            if coeff.is_single_term():
                negative, magnitude = coeff.signed_parts()
                if not mono:
                    body = magnitude
                elif magnitude == "1":
                    body = mono
                else:
                    body = f"{magnitude}*{mono}"
            else:
                negative = False
                body = coeff.text() if not mono else f"({coeff.text()})*{mono}"
                if body.startswith("-"):
                    negative, body = True, body[1:]
            if not pieces:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)


class QuantumTorus(BaseRing):
    """The ring R of the DAHA construction with tau_1, tau_2, delta_1 and delta_2 = 0."""

    kind = QUANTUM_TORUS
    name = "torus3"
    is_division_ring = False

    def __init__(self, params: ParameterSet = None):
        self.params = params or ParameterSet.generic()
        self.flavor = self.params.flavor
        q = self.params.q
        one = self.flavor.one()
        z1, z2, z3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
        # images of z1, z2, z3 under tau_i and tau_i^-1
        self._images = {
            (1, False): ((one, z2), (one, z1), (one, z3)),
            (1, True): ((one, z2), (one, z1), (one, z3)),
            (2, False): ((one, z2), (q.inverse(), z1), (one, z3)),
            (2, True): ((q, z2), (one, z1), (one, z3)),
        }

    def __eq__(self, other):
        return isinstance(other, QuantumTorus) and other.params == self.params

    def __hash__(self):
        return hash(("torus3", self.params))

    def __repr__(self):
        return f"QuantumTorus({self.params.describe()})"

    #################### CONSTRUCTION ####################
    def zero(self):
        return TorusElement(self, {})

    def one(self):
        return self.monomial((0, 0, 0))

    def scalar(self, value):
        if not isinstance(value, ParamScalar):
            value = self.flavor.from_fraction(value)
        elif value.flavor != self.flavor:
            value = self.params.specialize(value)
        return TorusElement(self, {(0, 0, 0): value})

    def monomial(self, exps: Exponent, coeff=None) -> TorusElement:
        coeff = self.flavor.one() if coeff is None else coeff
        if not isinstance(coeff, ParamScalar):
            coeff = self.flavor.from_fraction(coeff)
        return TorusElement(self, {tuple(exps): coeff})

    def from_unit(self, unit: Unit) -> TorusElement:
        return self.monomial(unit[1], unit[0])

    def generator(self, name: str):
        if name in GENERATOR_EXPONENTS:
            return self.monomial(GENERATOR_EXPONENTS[name])
        if name in ("q", "h"):
            return self.scalar(getattr(self.params, name))
        if name == "t":
            return self.scalar(self.params.t)
        raise KeyError(name)

    def generator_names(self):
        return ("z1", "z2", "z3")

    def compat_generators(self):
        gens = []
        for name in self.generator_names():
            g = self.generator(name)
            gens.append((name, g))
            gens.append((f"{name}^-1", g.inverse()))
        return gens

    def descriptor(self):
        return BaseRingDescriptor(
            kind=self.kind, name=self.name, flavor=str(self.flavor),
            generators=self.generator_names(),
            automorphisms=("tau1: z1<->z2", "tau2: z1->z2, z2->q^-1*z1, z3->z3"),
            derivations=("delta1: -alpha(z1+z2)/(z1-z2)(1-tau1)", "delta2: 0"),
        )

    #################### MULTIPLICATION ####################
    def _twist(self, left: Exponent, right: Exponent) -> ParamScalar:
        return self.params.q ** (left[2] * (right[0] + right[1]))

    def _unit_mul(self, u: Unit, v: Unit) -> Unit:
        (cu, eu), (cv, ev) = u, v
        exps = (eu[0] + ev[0], eu[1] + ev[1], eu[2] + ev[2])
        return cu * cv * self._twist(eu, ev), exps

    def _unit_pow(self, u: Unit, k: int) -> Unit:
        coeff, e = u
        # m^k = c^k q^(e3(e1+e2) k(k-1)/2) z^(k e), valid for every integer k
        twist = self.params.q ** (e[2] * (e[0] + e[1]) * k * (k - 1) // 2)
        return coeff ** k * twist, (k * e[0], k * e[1], k * e[2])

    def torus_mul(self, u: TorusElement, v: TorusElement) -> TorusElement:
        if u.torus != self or v.torus != self:
            raise ContextMismatchError("torus elements from different parameter contexts")
        product: Dict[Exponent, ParamScalar] = {}
        for eu, cu in u.terms:
            for ev, cv in v.terms:
                coeff, exps = self._unit_mul((cu, eu), (cv, ev))
                product[exps] = product[exps] + coeff if exps in product else coeff
        return TorusElement(self, product)

    #################### ENDOMORPHISMS ####################
    def _tau(self, index, u, inverse=False):
        try:
            images = self._images[(index, inverse)]
        except KeyError:
            raise UndefinedEndomorphismError(f"torus3 has no tau_{index}") from None
        result: Dict[Exponent, ParamScalar] = {}
        for exps, coeff in u.terms:
            unit: Unit = (coeff, (0, 0, 0))
            for image, e in zip(images, exps):
                if e:
                    unit = self._unit_mul(unit, self._unit_pow(image, e))
            c, image_exps = unit
            result[image_exps] = result[image_exps] + c if image_exps in result else c
        return TorusElement(self, result)

    def tau_is_identity(self, index):
        return False

    def delta_is_zero(self, index):
        return index == 2

    def delta(self, index, u):
        if index == 2:
            return self.zero()
        if index == 1:
            return self.delta1(u)
        raise UndefinedEndomorphismError(f"torus3 has no delta_{index}")

    def delta1(self, u: TorusElement) -> TorusElement:
        """-alpha (z1 + z2) (z1 - z2)^-1 (u - tau1(u)), divided slice by slice in z3."""
        alpha = self.params.alpha
        w = u - self.tau(1, u)
        slices: Dict[int, Dict[Tuple[int, int], ParamScalar]] = {}
        for (a, b, c), coeff in w.terms:
            slices.setdefault(c, {})[(a, b)] = coeff
        quotient: Dict[Exponent, ParamScalar] = {}
        for c, slice_terms in slices.items():
            for (a, b), coeff in slice_terms.items():
                mirror = slice_terms.get((b, a))
                if a == b or mirror is None or mirror != -coeff:
                    raise NonDivisibleError(
                        f"slice z3^{c} of (1 - tau1)(u) is not antisymmetric at z1^{a}*z2^{b}")
                if a < b:
                    continue
                n = a - b
                # (z1^a z2^b - z1^b z2^a) = (z1 - z2) * sum_k z1^(b+n-1-k) z2^(b+k)
                for k in range(n):
                    exps = (b + n - 1 - k, b + k, c)
                    quotient[exps] = quotient[exps] + coeff if exps in quotient else coeff
        q_elem = TorusElement(self, quotient)
        z_sum = self.generator("z1") + self.generator("z2")
        return self.scalar(-alpha) * (z_sum * q_elem)
