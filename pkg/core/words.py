"""
S = R[x; tau1, delta1] *_R R[y; tau2, delta2] on its basis of all words in x and y.

Coefficients sit on the left. No square reduction happens here; ``word_to_amalgam``
maps S onto the quadratic amalgam.
"""
from typing import Dict, Tuple

from core.errors import ContextMismatchError
from core.rings import LETTER_INDEX, BaseRing, EndoName

Word = str


def word_key(word: Word) -> Tuple[int, Word]:
    """Length first, then alphabetical with x < y."""
    return len(word), word


def word_order_cmp(u: Word, v: Word) -> int:
    ku, kv = word_key(u), word_key(v)
    return (ku > kv) - (ku < kv)


def _accumulate(terms: Dict[Word, object], word: Word, coeff):
    if coeff.is_zero():
        return
    if word in terms:
        total = terms[word] + coeff
        if total.is_zero():
            del terms[word]
        else:
            terms[word] = total
    else:
        terms[word] = coeff


def push_left(ring: BaseRing, word: Word, r) -> Dict[Word, object]:
    """word * r as sum of c_u u with left coefficients (letters apply rightmost first)."""
    state: Dict[Word, object] = {"": r}
    for letter in reversed(word):
        index = LETTER_INDEX[letter]
        nxt: Dict[Word, object] = {}
        for suffix, c in state.items():
            _accumulate(nxt, letter + suffix, ring.tau(index, c))
            _accumulate(nxt, suffix, ring.delta(index, c))
        state = nxt
    return state


def push_right(ring: BaseRing, r, word: Word) -> Dict[Word, object]:
    """r * word as sum of u c_u with right coefficients, via r l = l tau^-1(r) - delta(tau^-1(r))."""
    state: Dict[Word, object] = {"": r}
    for letter in word:
        index = LETTER_INDEX[letter]
        nxt: Dict[Word, object] = {}
        for prefix, c in state.items():
            pulled = ring.tau_inverse(index, c)
            _accumulate(nxt, prefix + letter, pulled)
            _accumulate(nxt, prefix, -ring.delta(index, pulled))
        state = nxt
    return state


def leading_twist(word: Word) -> EndoName:
    """The composite tau^j with leading(word * r) = tau^j(r) word."""
    return EndoName.from_word(word)


class WordElement:
    """Finite map word -> nonzero left coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: BaseRing, terms: Dict[Word, object]):
        self.ring = ring
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    @classmethod
    def constant(cls, ring: BaseRing, r) -> "WordElement":
        return cls(ring, {"": r})

    @classmethod
    def word(cls, ring: BaseRing, word: Word, coeff=None) -> "WordElement":
        return cls(ring, {word: ring.one() if coeff is None else coeff})

    def _check(self, other: "WordElement"):
        if other.ring != self.ring:
            raise ContextMismatchError("word elements over different base rings")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "WordElement") -> "WordElement":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(terms, w, c)
        return WordElement(self.ring, terms)

    def __neg__(self):
        return WordElement(self.ring, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "WordElement") -> "WordElement":
        return word_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, WordElement) and other.ring == self.ring and other.terms == self.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms, key=word_key)))

    def leading(self) -> Tuple[object, Word]:
        return leading(self)

    def text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for w in sorted(self.terms, key=word_key):
            c = self.terms[w]
            if not w:
                pieces.append(c.text())
            elif c == self.ring.one():
                pieces.append("*".join(w))
            else:
                pieces.append(f"({c.text()})*" + "*".join(w))
        return " + ".join(pieces)

    def __repr__(self):
        return f"WordElement({self.text()})"


def word_mul(f: WordElement, g: WordElement) -> WordElement:
    f._check(g)
    terms: Dict[Word, object] = {}
    for w1, r1 in f.terms.items():
        for w2, r2 in g.terms.items():
            for u, c in push_left(f.ring, w1, r2).items():
                _accumulate(terms, u + w2, r1 * c)
    return WordElement(f.ring, terms)


def leading(f: WordElement) -> Tuple[object, Word]:
    if f.is_zero():
        raise ValueError("the zero element has no leading term")
    word = max(f.terms, key=word_key)
    return f.terms[word], word


def _embed(poly, index: int, letter: str) -> WordElement:
    if poly.index != index:
        raise ContextMismatchError(f"expected a polynomial in {letter} (tau_{index}), got index {poly.index}")
    return WordElement(poly.ring, {letter * k: c for k, c in enumerate(poly.coeffs)})


def embed_first(poly) -> WordElement:
    """R[x; tau1, delta1] -> S."""
    return _embed(poly, 1, "x")


def embed_second(poly) -> WordElement:
    """R[y; tau2, delta2] -> S."""
    return _embed(poly, 2, "y")
