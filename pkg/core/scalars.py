"""
Exact coefficient domains.

Four flavors of scalar share one interface (``ParamScalar``):

* ``rational``  -- ``fractions.Fraction`` payload
* ``prime``     -- residue modulo a prime p
* ``laurent``   -- the commutative parameter ring Q[q^{+-1}, h^{+-1}], h standing for t^{1/2}
* ``ratfunc``   -- univariate rational functions K(s), K = Q or F_p, via sympy's sparse rings

Values are immutable. Arithmetic never mixes flavors; plain ``int`` operands are
promoted into the flavor of the other operand.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from sympy.polys.domains import GF, QQ
from sympy.polys.rings import ring

from core.errors import (CharacteristicError, FlavorMismatchError,
                         ScalarDivisionError, SpecializationError)

RATIONAL = "rational"
PRIME = "prime"
LAURENT = "laurent"
RATFUNC = "ratfunc"


@lru_cache(maxsize=None)
def _poly_ring(p: int):
    domain = QQ if p == 0 else GF(p)
    R, s = ring("s", domain)
    return R, s


def _fraction_text(value: Fraction) -> str:
    """Magnitude text of a nonzero fraction: ``3`` or ``(3/2)``."""
    value = abs(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"({value.numerator}/{value.denominator})"


def _power_text(symbol: str, exponent: int) -> str:
    if exponent == 1:
        return symbol
    return f"{symbol}^{exponent}"


@dataclass(frozen=True)
class Flavor:
    kind: str
    p: int = 0

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_field(self) -> bool:
        return self.kind != LAURENT

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        return self.from_fraction(Fraction(n))

    def from_fraction(self, value) -> "ParamScalar":
        value = Fraction(value)
        if self.kind == RATIONAL:
            return RationalScalar(value)
        if self.kind == PRIME:
            if value.denominator % self.p == 0:
                raise ScalarDivisionError(f"{value} has no image in F_{self.p}")
            return PrimeScalar(value.numerator * pow(value.denominator, -1, self.p), self.p)
        if self.kind == LAURENT:
            return LaurentScalar({(0, 0): value})
        if self.kind == RATFUNC:
            R, _ = _poly_ring(self.p)
            if self.p:
                if value.denominator % self.p == 0:
                    raise ScalarDivisionError(f"{value} has no image in F_{self.p}")
                const = R(value.numerator * pow(value.denominator, -1, self.p))
            else:
                const = R(QQ(value.numerator, value.denominator))
            return RatFuncScalar(const, R.one, self.p)
        raise FlavorMismatchError(f"unknown scalar flavor '{self.kind}'")

    def generator(self, name: str) -> "ParamScalar":
        """The named indeterminate of this flavor (q, h for laurent; s for ratfunc)."""
        if self.kind == LAURENT and name == "q":
            return LaurentScalar({(1, 0): Fraction(1)})
        if self.kind == LAURENT and name == "h":
            return LaurentScalar({(0, 1): Fraction(1)})
        if self.kind == RATFUNC and name == "s":
            R, s = _poly_ring(self.p)
            return RatFuncScalar(s, R.one, self.p)
        raise FlavorMismatchError(f"flavor {self} has no parameter '{name}'")

    def __str__(self):
        if self.kind == PRIME:
            return f"F_{self.p}"
        if self.kind == RATFUNC:
            return "F_%d(s)" % self.p if self.p else "Q(s)"
        if self.kind == LAURENT:
            return "Q[q^+-1,h^+-1]"
        return "Q"


RATIONAL_FLAVOR = Flavor(RATIONAL)
LAURENT_FLAVOR = Flavor(LAURENT)


def prime_flavor(p: int) -> Flavor:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return Flavor(PRIME, p)


def ratfunc_flavor(p: int = 0) -> Flavor:
    if p:
        prime_flavor(p)
    return Flavor(RATFUNC, p)


class ParamScalar:
    """Common arithmetic surface of every flavor."""

    flavor: Flavor

    #################### COERCION ####################
    def _coerce(self, other):
        if isinstance(other, ParamScalar):
            if other.flavor != self.flavor:
                raise FlavorMismatchError(
                    f"cannot combine {self.flavor} with {other.flavor}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.flavor.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._add(-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._mul(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._mul(other.inverse())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._mul(self.inverse())

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("scalar exponents must be integers")
        base = self if exponent >= 0 else self.inverse()
        result = self.flavor.one()
        for _ in range(abs(exponent)):
            result = result._mul(base)
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                other = self.flavor.from_fraction(other)
            except ScalarDivisionError:
                return False
        if not isinstance(other, ParamScalar) or other.flavor != self.flavor:
            return False
        return self._key() == other._key()

    def __hash__(self):
        return hash((self.flavor, self._key()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"{type(self).__name__}({self.text()})"

    def __str__(self):
        return self.text()

    #################### INTERFACE ####################
    def is_zero(self) -> bool:
        raise NotImplementedError

    def is_one(self) -> bool:
        return self == self.flavor.one()

    def is_unit(self) -> bool:
        return not self.is_zero()

    def inverse(self):
        raise NotImplementedError

    def is_single_term(self) -> bool:
        """True when the text form has no top-level sum."""
        return True

    def signed_parts(self) -> Tuple[bool, str]:
        """(negative, magnitude text) for a single-term value."""
        text = self.text()
        if text.startswith("-"):
            return True, text[1:]
        return False, text

    def text(self) -> str:
        raise NotImplementedError

    def normalized(self):
        """Rebuild from payload; canonical values are returned unchanged."""
        return self

    def _add(self, other):
        raise NotImplementedError

    def _mul(self, other):
        raise NotImplementedError

    def __neg__(self):
        return self._mul(self.flavor.from_int(-1))

    def _key(self):
        raise NotImplementedError


class RationalScalar(ParamScalar):

    __slots__ = ("value", "flavor")

    def __init__(self, value):
        self.value = Fraction(value)
        self.flavor = RATIONAL_FLAVOR

    def is_zero(self):
        return self.value == 0

    def inverse(self):
        if self.value == 0:
            raise ScalarDivisionError("division by zero")
        return RationalScalar(1 / self.value)

    def text(self):
        if self.value == 0:
            return "0"
        sign = "-" if self.value < 0 else ""
        return sign + _fraction_text(self.value)

    def normalized(self):
        return RationalScalar(Fraction(self.value.numerator, self.value.denominator))

    def _add(self, other):
        return RationalScalar(self.value + other.value)

    def _mul(self, other):
        return RationalScalar(self.value * other.value)

    def __neg__(self):
        return RationalScalar(-self.value)

    def _key(self):
        return self.value


class PrimeScalar(ParamScalar):

    __slots__ = ("value", "flavor")

    def __init__(self, value: int, p: int):
        self.value = int(value) % p
        self.flavor = Flavor(PRIME, p)

    def is_zero(self):
        return self.value == 0

    def inverse(self):
        if self.value == 0:
            raise ScalarDivisionError("division by zero")
        return PrimeScalar(pow(self.value, -1, self.flavor.p), self.flavor.p)

    def text(self):
        return str(self.value)

    def normalized(self):
        return PrimeScalar(self.value, self.flavor.p)

    def _add(self, other):
        return PrimeScalar(self.value + other.value, self.flavor.p)

    def _mul(self, other):
        return PrimeScalar(self.value * other.value, self.flavor.p)

    def _key(self):
        return self.value


class LaurentScalar(ParamScalar):
    """Element of Q[q^{+-1}, h^{+-1}] as a map (q-degree, h-degree) -> Fraction."""

    __slots__ = ("terms", "flavor")

    def __init__(self, terms: Dict[Tuple[int, int], Fraction]):
        cleaned = {k: Fraction(v) for k, v in terms.items() if v != 0}
        self.terms = tuple(sorted(cleaned.items(), reverse=True))
        self.flavor = LAURENT_FLAVOR

    def as_dict(self):
        return dict(self.terms)

    def is_zero(self):
        return not self.terms

    def is_unit(self):
        return len(self.terms) == 1

    def is_single_term(self):
        return len(self.terms) <= 1

    def inverse(self):
        if not self.is_unit():
            raise ScalarDivisionError(f"{self.text()} is not a unit of the parameter ring")
        (qd, hd), coeff = self.terms[0]
        return LaurentScalar({(-qd, -hd): 1 / coeff})

    def normalized(self):
        return LaurentScalar(self.as_dict())

    def _add(self, other):
        total = self.as_dict()
        for key, value in other.terms:
            total[key] = total.get(key, 0) + value
        return LaurentScalar(total)

    def _mul(self, other):
        product: Dict[Tuple[int, int], Fraction] = {}
        for (a, b), u in self.terms:
            for (c, d), v in other.terms:
                key = (a + c, b + d)
                product[key] = product.get(key, 0) + u * v
        return LaurentScalar(product)

    def __neg__(self):
        return LaurentScalar({k: -v for k, v in self.terms})

    def _key(self):
        return self.terms

    @staticmethod
    def _term_text(qd: int, hd: int, coeff: Fraction) -> Tuple[bool, str]:
        factors = []
        if qd:
            factors.append(_power_text("q", qd))
        if hd:
            factors.append(_power_text("h", hd))
        magnitude = _fraction_text(coeff)
        if not factors:
            return coeff < 0, magnitude
        if magnitude != "1":
            factors.insert(0, magnitude)
        return coeff < 0, "*".join(factors)

    def text(self):
        if not self.terms:
            return "0"
        pieces = []
        for index, ((qd, hd), coeff) in enumerate(self.terms):
            negative, body = self._term_text(qd, hd, coeff)
            if index == 0:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)


class RatFuncScalar(ParamScalar):
    """Reduced fraction num/den in K(s) with den monic."""

    __slots__ = ("num", "den", "flavor")

    def __init__(self, num, den, p: int = 0):
        R, _ = _poly_ring(p)
        num, den = R(num), R(den)
        if den.is_zero:
            raise ScalarDivisionError("zero denominator")
        if num.is_zero:
            num, den = R.zero, R.one
        else:
            g = num.gcd(den)
            num, den = num.exquo(g), den.exquo(g)
            lead = den.LC
            num, den = num.quo_ground(lead), den.quo_ground(lead)
        self.num = num
        self.den = den
        self.flavor = Flavor(RATFUNC, p)

    @property
    def ring(self):
        return self.num.ring

    def is_zero(self):
        return self.num.is_zero

    def is_single_term(self):
        return self.den == self.ring.one and len(self.num.terms()) <= 1

    def inverse(self):
        if self.is_zero():
            raise ScalarDivisionError("division by zero")
        return RatFuncScalar(self.den, self.num, self.flavor.p)

    def normalized(self):
        return RatFuncScalar(self.num, self.den, self.flavor.p)

    def _add(self, other):
        return RatFuncScalar(self.num * other.den + other.num * self.den,
                             self.den * other.den, self.flavor.p)

    def _mul(self, other):
        return RatFuncScalar(self.num * other.num, self.den * other.den, self.flavor.p)

    def __neg__(self):
        return RatFuncScalar(-self.num, self.den, self.flavor.p)

    def _key(self):
        return (tuple(self.num.terms()), tuple(self.den.terms()))

    def coefficient_fraction(self, c) -> Fraction:
        if self.flavor.p:
            return Fraction(int(c) % self.flavor.p)
        return Fraction(int(QQ.numer(c)), int(QQ.denom(c)))

    def _poly_text(self, poly) -> str:
        if poly.is_zero:
            return "0"
        pieces = []
        for index, ((deg,), c) in enumerate(sorted(poly.terms(), reverse=True)):
            coeff = self.coefficient_fraction(c)
            magnitude = _fraction_text(coeff)
            if deg == 0:
                body = magnitude
            elif magnitude == "1":
                body = _power_text("s", deg)
            else:
                body = magnitude + "*" + _power_text("s", deg)
            if index == 0:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append(("-" if coeff < 0 else "+") + body)
        return "".join(pieces)

    def text(self):
        if self.den == self.ring.one:
            return self._poly_text(self.num)
        return f"({self._poly_text(self.num)})/({self._poly_text(self.den)})"

    def polynomial_coefficients(self, which: str = "num") -> Dict[int, Fraction]:
        poly = self.num if which == "num" else self.den
        return {deg: self.coefficient_fraction(c) for (deg,), c in poly.terms()}

    def degree_pair(self) -> Tuple[int, int]:
        return self.num.degree(), self.den.degree()


#################### AUTOMORPHISMS AND DERIVATIONS ####################
def _evaluate_polynomial(poly: Dict[int, Fraction], at: ParamScalar) -> ParamScalar:
    result = at.flavor.zero()
    top = max(poly) if poly else 0
    for deg in range(top, -1, -1):
        result = result * at + poly.get(deg, Fraction(0))
    return result


def compose_ratfunc(f: RatFuncScalar, image: RatFuncScalar) -> RatFuncScalar:
    """f(image): substitute ``image`` for s."""
    if f.flavor != image.flavor:
        raise FlavorMismatchError(f"cannot substitute {image.flavor} into {f.flavor}")
    num = _evaluate_polynomial(f.polynomial_coefficients("num"), image)
    den = _evaluate_polynomial(f.polynomial_coefficients("den"), image)
    return num / den


@dataclass(frozen=True)
class FieldAutomorphismSpec:
    """Automorphism of K(s) fixing K, given by the image of s and of its inverse."""

    name: str
    image: Optional[RatFuncScalar] = None
    inverse_image: Optional[RatFuncScalar] = None

    def __post_init__(self):
        if self.image is None:
            return
        s = self.image.flavor.generator("s")
        if compose_ratfunc(self.inverse_image, self.image) != s or \
                compose_ratfunc(self.image, self.inverse_image) != s:
            raise ValueError(f"automorphism '{self.name}' does not invert on s")

    @property
    def is_identity(self) -> bool:
        return self.image is None or self.image == self.image.flavor.generator("s")

    def apply(self, f: ParamScalar) -> ParamScalar:
        if self.image is None:
            return f
        return compose_ratfunc(f, self.image)

    def apply_inverse(self, f: ParamScalar) -> ParamScalar:
        if self.image is None:
            return f
        return compose_ratfunc(f, self.inverse_image)

    def inverse(self) -> "FieldAutomorphismSpec":
        if self.image is None:
            return self
        return FieldAutomorphismSpec(self.name + "^-1", self.inverse_image, self.image)

    def power(self, n: int) -> "FieldAutomorphismSpec":
        base = self if n >= 0 else self.inverse()
        if self.image is None or n == 0:
            return FieldAutomorphismSpec("id")
        image = base.image.flavor.generator("s")
        inverse_image = image
        for _ in range(abs(n)):
            image = base.apply(image)
            inverse_image = base.apply_inverse(inverse_image)
        return FieldAutomorphismSpec(f"{self.name}^{n}", image, inverse_image)


IDENTITY_AUTOMORPHISM = FieldAutomorphismSpec("id")

ZERO_DERIVATION = "zero"
DDS_DERIVATION = "d/ds"
TWISTED_DERIVATION = "twisted"


@dataclass(frozen=True)
class DerivationSpec:
    """A tau-derivation of K(s), determined by its paired automorphism and its value on s.

    The value on s[k] follows from delta(rs) = tau(r)delta(s) + delta(r)s; constants map to 0.
    """

    name: str
    kind: str = ZERO_DERIVATION
    automorphism: FieldAutomorphismSpec = IDENTITY_AUTOMORPHISM
    on_s: Optional[RatFuncScalar] = None

    @property
    def is_zero(self) -> bool:
        return self.kind == ZERO_DERIVATION or (self.on_s is not None and self.on_s.is_zero())

    def _on_polynomial(self, poly: Dict[int, Fraction], flavor: Flavor) -> ParamScalar:
        s = flavor.generator("s")
        if self.kind == DDS_DERIVATION:
            delta_s = flavor.one()
        else:
            delta_s = self.on_s
        tau_s = self.automorphism.apply(s)
        total = flavor.zero()
        # delta(s^k) = tau(s)^(k-1) delta(s) + delta(s^(k-1)) s
        delta_power = flavor.zero()
        top = max(poly) if poly else 0
        for deg in range(1, top + 1):
            delta_power = tau_s ** (deg - 1) * delta_s + delta_power * s
            coeff = poly.get(deg, Fraction(0))
            if coeff:
                total = total + delta_power * coeff
        return total

    def apply(self, f: ParamScalar) -> ParamScalar:
        if not isinstance(f, RatFuncScalar):
            raise FlavorMismatchError(f"derivation '{self.name}' acts on rational functions only")
        if self.is_zero:
            return f.flavor.zero()
        num = f.polynomial_coefficients("num")
        den = f.polynomial_coefficients("den")
        delta_num = self._on_polynomial(num, f.flavor)
        delta_den = self._on_polynomial(den, f.flavor)
        den_value = RatFuncScalar(f.den, f.ring.one, f.flavor.p)
        # delta(n) = tau(f) delta(d) + delta(f) d
        return (delta_num - self.automorphism.apply(f) * delta_den) / den_value

    def check_leibniz(self, samples) -> bool:
        for u, v in samples:
            lhs = self.apply(u * v)
            rhs = self.automorphism.apply(u) * self.apply(v) + self.apply(u) * v
            if lhs != rhs:
                return False
        return True


def derive(d: DerivationSpec, f: ParamScalar) -> ParamScalar:
    """Apply the derivation ``d`` to ``f`` (quotient rule for fractions)."""
    return d.apply(f)


#################### PARAMETERS AND SPECIALIZATION ####################
def specialize(f: ParamScalar, assignment: Dict[str, ParamScalar]) -> ParamScalar:
    """Evaluate a parameter-Laurent scalar at values for q and h."""
    if not isinstance(f, LaurentScalar):
        raise FlavorMismatchError("only parameter-Laurent scalars can be specialized")
    try:
        q, h = assignment["q"], assignment["h"]
    except KeyError as err:
        raise SpecializationError(f"no value assigned to {err.args[0]}") from None
    if q.flavor != h.flavor:
        raise FlavorMismatchError("q and h must be assigned in one flavor")
    target = q.flavor
    needs_q_inverse = any(qd < 0 for (qd, _), _ in f.terms)
    needs_h_inverse = any(hd < 0 for (_, hd), _ in f.terms)
    if q.is_zero() and needs_q_inverse:
        raise SpecializationError("q assigned 0 but appears with a negative exponent")
    if h.is_zero() and needs_h_inverse:
        raise SpecializationError("h assigned 0 but appears with a negative exponent")
    total = target.zero()
    for (qd, hd), coeff in f.terms:
        try:
            scalar = target.from_fraction(coeff)
        except ScalarDivisionError as err:
            raise SpecializationError(str(err)) from None
        total = total + scalar * (q ** qd) * (h ** hd)
    return total


@dataclass(frozen=True)
class ParameterSet:
    """Values of q and h = t^(1/2) in a coefficient flavor: generic or specialized."""

    flavor: Flavor
    q: ParamScalar
    h: ParamScalar

    @classmethod
    def generic(cls) -> "ParameterSet":
        return cls(LAURENT_FLAVOR, LAURENT_FLAVOR.generator("q"), LAURENT_FLAVOR.generator("h"))

    @classmethod
    def specialized(cls, q, h, p: int = 0) -> "ParameterSet":
        flavor = RATIONAL_FLAVOR if p == 0 else prime_flavor(p)
        q_value, h_value = flavor.from_fraction(q), flavor.from_fraction(h)
        if q_value.is_zero():
            raise SpecializationError("q must be nonzero")
        if h_value.is_zero():
            raise SpecializationError("t^(1/2) must be nonzero")
        return cls(flavor, q_value, h_value)

    @property
    def is_generic(self) -> bool:
        return self.flavor.kind == LAURENT

    def _half(self) -> ParamScalar:
        if self.flavor.characteristic == 2:
            raise CharacteristicError("1/2 does not exist in characteristic 2")
        return self.flavor.from_fraction(Fraction(1, 2))

    @property
    def t(self) -> ParamScalar:
        return self.h * self.h

    @property
    def alpha(self) -> ParamScalar:
        return self._half() * (self.h - self.h.inverse())

    @property
    def beta(self) -> ParamScalar:
        return self._half() * (self.h + self.h.inverse())

    def specialize(self, f: ParamScalar) -> ParamScalar:
        """Image of a generic scalar at this parameter point."""
        if self.is_generic:
            return f
        return specialize(f, {"q": self.q, "h": self.h})

    def describe(self) -> str:
        if self.is_generic:
            return "generic"
        return f"q={self.q.text()}, h={self.h.text()} over {self.flavor}"
