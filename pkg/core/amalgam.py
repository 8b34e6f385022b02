"""
Q = Q1 *_R Q2 with Q1 = R[x; tau1, delta1]/<x^2 - a x - b> and Q2 = R[y; tau2, delta2]/<y^2 - c y - d>.

Canonical elements use left coefficients on the alternating words
1, x, y, xy, yx, xyx, yxy, ... . A right-coefficient view exists for the ideal engine.

Normal forms come from rewriting: coefficients are pushed left through words with
x r = tau(r) x + delta(r) and the leftmost doubled letter zz is replaced by a_z z + b_z.
Every step shortens the word, so rewriting terminates.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from core.errors import ContextMismatchError, NotInvertibleError, SkewAlgError
from core.logger import log
from core.ore import CompatReport, QuadraticData, require_compatible
from core.rings import BaseRing
from core.scalars import ParamScalar
from core.words import Word, WordElement, _accumulate, push_left, push_right, word_key

NEG_INF = float("-inf")

LETTERS = ("x", "y")


def alt_word(first: str, n: int) -> Word:
    """x^(n) or y^(n): the alternating word of length n starting with ``first``."""
    other = "y" if first == "x" else "x"
    return "".join(first if k % 2 == 0 else other for k in range(n))


def hat_word(last: str, n: int) -> Word:
    """x-hat^(n) or y-hat^(n): the alternating word of length n ending with ``last``."""
    return alt_word(last, n)[::-1]


def is_alternating(word: Word) -> bool:
    return all(word[k] != word[k + 1] for k in range(len(word) - 1))


def factor_word(kind: str, n: int, m: int) -> Word:
    """The alternating word completing a basis word of degree n to degree m.

    x^(n) x_{n,m} = x^(m), y^(n) y_{n,m} = y^(m),
    xhat_{n,m} xhat^(n) = xhat^(m), yhat_{n,m} yhat^(n) = yhat^(m).
    """
    if m < n or n < 0:
        raise ValueError(f"word factor needs 0 <= n <= m, got n={n}, m={m}")
    if kind in ("x", "y"):
        return alt_word(kind, m)[n:]
    if kind in ("xhat", "yhat"):
        return hat_word(kind[0], m)[:m - n]
    raise ValueError(f"unknown word factor kind '{kind}'")


@dataclass(frozen=True)
class DegreeLeading:
    degree: Union[int, float]
    pair: Optional[Tuple[object, object]]

    @property
    def is_zero(self) -> bool:
        return self.degree == NEG_INF


class AmalgamInstance:
    """Base ring plus the two quadratic data; both are checked for normality on construction."""

    def __init__(self, name: str, ring: BaseRing, first: QuadraticData, second: QuadraticData,
                 check: bool = True):
        if first.ring != ring or second.ring != ring or first.index != 1 or second.index != 2:
            raise ContextMismatchError("quadratic data must be (x, index 1) and (y, index 2) over the ring")
        self.name = name
        self.ring = ring
        self.quads: Dict[str, QuadraticData] = {"x": first, "y": second}
        self.reports: Tuple[Optional[CompatReport], Optional[CompatReport]] = (None, None)
        if check:
            self.reports = (require_compatible(first), require_compatible(second))
            if not ring.check_inverses():
                raise NotInvertibleError(f"the automorphisms of {ring.name} do not invert")
            log("debug", f"instance {name} passed the normality checks")

    def __eq__(self, other):
        return isinstance(other, AmalgamInstance) and other.name == self.name and other.ring == self.ring

    def __hash__(self):
        return hash((self.name, self.ring))

    def __repr__(self):
        return f"AmalgamInstance({self.name})"

    def quad(self, letter: str) -> QuadraticData:
        return self.quads[letter]

    #################### ELEMENTS ####################
    def _ring_element(self, r):
        if isinstance(r, (int, Fraction, ParamScalar)):
            return self.ring.scalar(r)
        return r

    def zero(self) -> "AmalgamElement":
        return AmalgamElement(self, {})

    def one(self) -> "AmalgamElement":
        return self.scalar(self.ring.one())

    def scalar(self, r) -> "AmalgamElement":
        return AmalgamElement(self, {"": self._ring_element(r)})

    def word(self, word: Word, coeff=None) -> "AmalgamElement":
        coeff = self.ring.one() if coeff is None else self._ring_element(coeff)
        if is_alternating(word):
            return AmalgamElement(self, {word: coeff})
        return _normalize_left(self, {word: coeff})

    def letter(self, letter: str) -> "AmalgamElement":
        return self.word(letter)

    def x_alt(self, n: int) -> "AmalgamElement":
        return self.word(alt_word("x", n))

    def y_alt(self, n: int) -> "AmalgamElement":
        return self.word(alt_word("y", n))

    def x_hat(self, n: int) -> "AmalgamElement":
        return self.word(hat_word("x", n))

    def y_hat(self, n: int) -> "AmalgamElement":
        return self.word(hat_word("y", n))

    def from_pairs(self, r0, pairs) -> "AmalgamElement":
        """r0 + sum_i (r_i x^(i) + r'_i y^(i))."""
        terms = {"": self._ring_element(r0)}
        for i, (ri, rpi) in enumerate(pairs, start=1):
            terms[alt_word("x", i)] = self._ring_element(ri)
            terms[alt_word("y", i)] = self._ring_element(rpi)
        return AmalgamElement(self, terms)

    def generator(self, name: str) -> "AmalgamElement":
        if name in LETTERS:
            return self.letter(name)
        return self.scalar(self.ring.generator(name))

    def letter_inverse(self, letter: str) -> "AmalgamElement":
        """z^-1 = b^-1 (z - a) when the quadratic constant b is a unit; certified both ways."""
        qd = self.quad(letter)
        if not self.ring.is_unit(qd.b):
            raise NotInvertibleError(f"{letter} is not invertible: {qd.b.text()} is not a unit")
        z = self.letter(letter)
        candidate = self.scalar(self.ring.inverse(qd.b)) * (z - self.scalar(qd.a))
        if z * candidate != self.one() or candidate * z != self.one():
            raise NotInvertibleError(f"b^-1({letter} - a) is not a two-sided inverse of {letter}")
        return candidate


def _first_doubled(word: Word) -> Optional[int]:
    for k in range(len(word) - 1):
        if word[k] == word[k + 1]:
            return k
    return None


def _last_doubled(word: Word) -> Optional[int]:
    for k in range(len(word) - 2, -1, -1):
        if word[k] == word[k + 1]:
            return k
    return None


def _normalize_left(instance: AmalgamInstance, terms: Dict[Word, object]) -> "AmalgamElement":
    ring = instance.ring
    pending: Dict[Word, object] = {}
    for w, c in terms.items():
        _accumulate(pending, w, c)
    result: Dict[Word, object] = {}
    while pending:
        word = max(pending, key=len)
        coeff = pending.pop(word)
        k = _first_doubled(word)
        if k is None:
            _accumulate(result, word, coeff)
            continue
        u, z, v = word[:k], word[k], word[k + 2:]
        qd = instance.quad(z)
        # c u zz v = c (u a) z v + c (u b) v
        for w, d in push_left(ring, u, qd.a).items():
            _accumulate(pending, w + z + v, coeff * d)
        for w, d in push_left(ring, u, qd.b).items():
            _accumulate(pending, w + v, coeff * d)
    return AmalgamElement(instance, result)


def _normalize_right(instance: AmalgamInstance, terms: Dict[Word, object]) -> "AmalgamElementRight":
    ring = instance.ring
    pending: Dict[Word, object] = {}
    for w, c in terms.items():
        _accumulate(pending, w, c)
    result: Dict[Word, object] = {}
    while pending:
        word = max(pending, key=len)
        coeff = pending.pop(word)
        k = _last_doubled(word)
        if k is None:
            _accumulate(result, word, coeff)
            continue
        u, z, v = word[:k], word[k], word[k + 2:]
        qd = instance.quad(z)
        index = qd.index
        # zz = z tau^-1(a) + (b - delta(tau^-1(a))) with coefficients on the right
        a_right = ring.tau_inverse(index, qd.a)
        b_right = qd.b - ring.delta(index, a_right)
        for w, d in push_right(ring, a_right, v).items():
            _accumulate(pending, u + z + w, d * coeff)
        for w, d in push_right(ring, b_right, v).items():
            _accumulate(pending, u + w, d * coeff)
    return AmalgamElementRight(instance, result)


class AmalgamElement:
    """r0 + sum (r_i x^(i) + r'_i y^(i)), stored as alternating word -> left coefficient."""

    __slots__ = ("instance", "terms")

    def __init__(self, instance: AmalgamInstance, terms: Dict[Word, object]):
        self.instance = instance
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def _check(self, other):
        if not isinstance(other, AmalgamElement):
            return self.instance.scalar(other)
        if other.instance is not self.instance and other.instance != self.instance:
            raise ContextMismatchError("amalgam elements from different instances")
        return other

    #################### ARITHMETIC ####################
    def __add__(self, other):
        other = self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(terms, w, c)
        return AmalgamElement(self.instance, terms)

    __radd__ = __add__

    def __neg__(self):
        return AmalgamElement(self.instance, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) + (-self)

    def __mul__(self, other):
        return amalgam_mul(self, self._check(other))

    def __rmul__(self, other):
        return amalgam_mul(self._check(other), self)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.instance.one()
        for _ in range(exponent):
            result = result * self
        return result

    def scale_left(self, r) -> "AmalgamElement":
        r = self.instance._ring_element(r)
        return AmalgamElement(self.instance, {w: r * c for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, AmalgamElement):
            try:
                other = self.instance.scalar(other)
            except (SkewAlgError, TypeError, AttributeError):
                return False
        return other.instance == self.instance and other.terms == self.terms

    def __hash__(self):
        return hash(tuple(sorted(((w, c) for w, c in self.terms.items()), key=lambda t: word_key(t[0]))))

    def __repr__(self):
        return f"AmalgamElement({self.text()})"

    def __str__(self):
        return self.text()

    #################### DEGREE ####################
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> Union[int, float]:
        if not self.terms:
            return NEG_INF
        return max(len(w) for w in self.terms)

    def coeff(self, word: Word):
        return self.terms.get(word, self.instance.ring.zero())

    @property
    def r0(self):
        return self.coeff("")

    def pair(self, i: int) -> Tuple[object, object]:
        """(r_i, r'_i): coefficients of x^(i), y^(i); (r0, 0) at i = 0."""
        if i == 0:
            return self.r0, self.instance.ring.zero()
        return self.coeff(alt_word("x", i)), self.coeff(alt_word("y", i))

    def hat_pair(self, i: int) -> Tuple[object, object]:
        """Left coefficients of xhat^(i), yhat^(i); (r0, 0) at i = 0."""
        if i == 0:
            return self.r0, self.instance.ring.zero()
        return self.coeff(hat_word("x", i)), self.coeff(hat_word("y", i))

    def is_unit(self) -> bool:
        return self.degree == 0 and self.instance.ring.is_unit(self.r0)

    def inverse(self) -> "AmalgamElement":
        if self.degree == 0 and self.instance.ring.is_unit(self.r0):
            return self.instance.scalar(self.instance.ring.inverse(self.r0))
        if len(self.terms) == 1 and len(next(iter(self.terms))) == 1:
            letter, c = next(iter(self.terms.items()))
            if c == self.instance.ring.one():
                return self.instance.letter_inverse(letter)
        raise NotInvertibleError(f"{self.text()} is not a recognised unit")

    #################### TEXT ####################
    def text(self) -> str:
        if not self.terms:
            return "0"
        ring_one = self.instance.ring.one()
        pieces = []
        for w in sorted(self.terms, key=word_key):
            c = self.terms[w]
            if not w:
                pieces.append(c.text())
            elif c == ring_one:
                pieces.append("*".join(w))
            else:
                pieces.append(f"({c.text()})*" + "*".join(w))
        return " + ".join(pieces)


class AmalgamElementRight:
    """The same element on the basis 1, xhat^(i), yhat^(i) with coefficients on the right."""

    __slots__ = ("instance", "terms")

    def __init__(self, instance: AmalgamInstance, terms: Dict[Word, object]):
        self.instance = instance
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(len(w) for w in self.terms)

    def coeff(self, word: Word):
        return self.terms.get(word, self.instance.ring.zero())

    def pair(self, i: int) -> Tuple[object, object]:
        """Right coefficients of x^(i), y^(i); (r0, 0) at i = 0."""
        if i == 0:
            return self.coeff(""), self.instance.ring.zero()
        return self.coeff(alt_word("x", i)), self.coeff(alt_word("y", i))

    def __eq__(self, other):
        return isinstance(other, AmalgamElementRight) and other.instance == self.instance \
            and other.terms == self.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms, key=word_key)))

    def text(self) -> str:
        if not self.terms:
            return "0"
        ring_one = self.instance.ring.one()
        pieces = []
        for w in sorted(self.terms, key=word_key):
            c = self.terms[w]
            if not w:
                pieces.append(c.text())
            elif c == ring_one:
                pieces.append("*".join(w))
            else:
                pieces.append("*".join(w) + f"*({c.text()})")
        return " + ".join(pieces)

    def __repr__(self):
        return f"AmalgamElementRight({self.text()})"


#################### OPERATIONS ####################
def amalgam_mul(f: AmalgamElement, g: AmalgamElement) -> AmalgamElement:
    if f.instance is not g.instance and f.instance != g.instance:
        raise ContextMismatchError("amalgam elements from different instances")
    ring = f.instance.ring
    raw: Dict[Word, object] = {}
    for w1, r1 in f.terms.items():
        for w2, r2 in g.terms.items():
            for u, c in push_left(ring, w1, r2).items():
                _accumulate(raw, u + w2, r1 * c)
    return _normalize_left(f.instance, raw)


def degree_leading(f: AmalgamElement) -> DegreeLeading:
    if f.is_zero():
        return DegreeLeading(NEG_INF, None)
    n = f.degree
    return DegreeLeading(n, f.pair(n))


def to_right_form(f: AmalgamElement) -> AmalgamElementRight:
    ring = f.instance.ring
    raw: Dict[Word, object] = {}
    for w, r in f.terms.items():
        for u, c in push_right(ring, r, w).items():
            _accumulate(raw, u, c)
    return _normalize_right(f.instance, raw)


def to_left_form(f: AmalgamElementRight) -> AmalgamElement:
    ring = f.instance.ring
    raw: Dict[Word, object] = {}
    for w, r in f.terms.items():
        for u, c in push_left(ring, w, r).items():
            _accumulate(raw, u, c)
    return _normalize_left(f.instance, raw)


def word_factor(instance: AmalgamInstance, kind: str, n: int, m: int) -> AmalgamElement:
    return instance.word(factor_word(kind, n, m))


def word_to_amalgam(instance: AmalgamInstance, f: WordElement) -> AmalgamElement:
    """The quotient map S -> Q."""
    if f.ring != instance.ring:
        raise ContextMismatchError("word element and instance have different base rings")
    return _normalize_left(instance, f.terms)
