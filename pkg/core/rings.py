"""
The base-ring contract shared by the quantum torus and the field presets.

A base ring carries two named automorphisms tau_1, tau_2 and two tau-derivations
delta_1, delta_2, indexed by 1 (the letter x) and 2 (the letter y).
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from core.errors import NotInvertibleError, UndefinedEndomorphismError
from core.logger import log

QUANTUM_TORUS = "quantum-torus"
FIELD_PRESET = "field-preset"

LETTER_INDEX = {"x": 1, "y": 2}


@dataclass(frozen=True)
class EndoName:
    """A composite tau_{i1}^{e1} tau_{i2}^{e2} ... listed outermost first.

    Applying the name to r evaluates the rightmost factor first.
    """

    factors: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def identity(cls) -> "EndoName":
        return cls(())

    @classmethod
    def tau(cls, index: int, power: int = 1) -> "EndoName":
        if index not in (1, 2):
            raise UndefinedEndomorphismError(f"no automorphism tau_{index}")
        if power == 0:
            return cls(())
        return cls(((index, power),))

    @classmethod
    def from_word(cls, word: str) -> "EndoName":
        """tau^j read off a word: each letter contributes its tau, first letter outermost."""
        return cls(tuple((LETTER_INDEX[letter], 1) for letter in word))

    def compose(self, inner: "EndoName") -> "EndoName":
        """self after inner."""
        merged: List[Tuple[int, int]] = list(self.factors)
        for index, power in inner.factors:
            if merged and merged[-1][0] == index:
                total = merged[-1][1] + power
                merged.pop()
                if total:
                    merged.append((index, total))
            else:
                merged.append((index, power))
        return EndoName(tuple(merged))

    def inverse(self) -> "EndoName":
        return EndoName(tuple((index, -power) for index, power in reversed(self.factors)))

    @property
    def is_identity(self) -> bool:
        return not self.factors

    def __str__(self):
        if not self.factors:
            return "id"
        parts = []
        for index, power in self.factors:
            parts.append(f"tau{index}" if power == 1 else f"tau{index}^{power}")
        return "*".join(parts)


def tau_alt(i: int) -> EndoName:
    """tau^(i) = tau_1 tau_2 tau_1 ... with i factors."""
    if i < 0:
        raise ValueError("tau_alt needs a nonnegative index")
    return EndoName(tuple((1 if k % 2 == 0 else 2, 1) for k in range(i)))


def parity_selector(n: int) -> int:
    """[[n]]: 1 when n is odd, 2 when n is even."""
    return 1 if n % 2 else 2


@dataclass(frozen=True)
class BaseRingDescriptor:
    kind: str
    name: str
    flavor: str
    generators: Tuple[str, ...]
    automorphisms: Tuple[str, str]
    derivations: Tuple[str, str]

    def as_dict(self) -> Dict:
        return {
            "kind": self.kind,
            "name": self.name,
            "flavor": self.flavor,
            "generators": list(self.generators),
            "automorphisms": list(self.automorphisms),
            "derivations": list(self.derivations),
        }


class BaseRing(ABC):
    """Element arithmetic lives on the elements; the ring holds tau, delta and constructors."""

    kind: str = ""
    name: str = ""
    is_division_ring: bool = False
    taus_invertible: bool = True

    #################### CONSTRUCTION ####################
    @abstractmethod
    def zero(self):
        ...

    @abstractmethod
    def one(self):
        ...

    @abstractmethod
    def scalar(self, value):
        """Embed a coefficient scalar (or int) into the ring."""

    @abstractmethod
    def generator(self, name: str):
        ...

    @abstractmethod
    def generator_names(self) -> Tuple[str, ...]:
        ...

    @abstractmethod
    def compat_generators(self) -> List[Tuple[str, object]]:
        """Labelled elements that generate the ring for the normality check."""

    @abstractmethod
    def descriptor(self) -> BaseRingDescriptor:
        ...

    #################### TWISTS ####################
    @abstractmethod
    def _tau(self, index: int, u, inverse: bool = False):
        ...

    @abstractmethod
    def delta(self, index: int, u):
        ...

    @abstractmethod
    def tau_is_identity(self, index: int) -> bool:
        ...

    @abstractmethod
    def delta_is_zero(self, index: int) -> bool:
        ...

    def tau(self, index: int, u):
        return self._tau(index, u)

    def tau_inverse(self, index: int, u):
        if not self.taus_invertible:
            raise NotInvertibleError(f"tau_{index} of {self.name} is not invertible")
        return self._tau(index, u, inverse=True)

    def apply_endo(self, endo: EndoName, u):
        for index, power in reversed(endo.factors):
            for _ in range(abs(power)):
                u = self._tau(index, u, inverse=power < 0)
        return u

    def apply_delta(self, name: str, u):
        """Apply a derivation by name: 'delta1' or 'delta2'."""
        names = {"delta1": 1, "delta2": 2, "d1": 1, "d2": 2}
        if name not in names:
            raise UndefinedEndomorphismError(f"{self.name} has no derivation '{name}'")
        return self.delta(names[name], u)

    #################### UNITS ####################
    def is_unit(self, u) -> bool:
        return u.is_unit()

    def inverse(self, u):
        if not u.is_unit():
            raise NotInvertibleError(f"{u.text()} is not a unit of {self.name}")
        return u.inverse()

    #################### CHECKS ####################
    def check_inverses(self) -> bool:
        """tau_i^{-1} tau_i and tau_i tau_i^{-1} fix every generator."""
        for index in (1, 2):
            for label, g in self.compat_generators():
                if self.tau_inverse(index, self.tau(index, g)) != g or \
                        self.tau(index, self.tau_inverse(index, g)) != g:
                    log("error", f"tau_{index} of {self.name} does not invert on {label}")
                    return False
        return True

    def check_twisted_leibniz(self, pairs: Iterable[Tuple[object, object]]) -> bool:
        """delta_i(uv) = tau_i(u) delta_i(v) + delta_i(u) v on the given pairs."""
        for u, v in pairs:
            for index in (1, 2):
                lhs = self.delta(index, u * v)
                rhs = self.tau(index, u) * self.delta(index, v) + self.delta(index, u) * v
                if lhs != rhs:
                    log("error", f"delta_{index} of {self.name} fails the twisted Leibniz law",
                        detail=f"u = {u.text()}, v = {v.text()}")
                    return False
        return True
