"""
Division-ring base rings: K(s) with declared automorphisms and tau-derivations.

Ring elements are ``RatFuncScalar`` values; both letters share the field but carry
their own (tau_i, delta_i).
"""
from typing import Dict, Tuple

from core.amalgam import AmalgamInstance
from core.errors import UndefinedEndomorphismError, UnknownContextError
from core.ore import QuadraticData
from core.rings import FIELD_PRESET, BaseRing, BaseRingDescriptor
from core.scalars import (DDS_DERIVATION, IDENTITY_AUTOMORPHISM, ZERO_DERIVATION,
                          DerivationSpec, FieldAutomorphismSpec, Flavor,
                          ParamScalar, ratfunc_flavor)


class FieldPreset(BaseRing):

    kind = FIELD_PRESET
    is_division_ring = True

    def __init__(self, name: str, flavor: Flavor,
                 automorphisms: Tuple[FieldAutomorphismSpec, FieldAutomorphismSpec],
                 derivations: Tuple[DerivationSpec, DerivationSpec]):
        self.name = name
        self.flavor = flavor
        self.automorphisms: Dict[int, FieldAutomorphismSpec] = {1: automorphisms[0], 2: automorphisms[1]}
        self.derivations: Dict[int, DerivationSpec] = {1: derivations[0], 2: derivations[1]}

    def __eq__(self, other):
        return isinstance(other, FieldPreset) and other.name == self.name and other.flavor == self.flavor

    def __hash__(self):
        return hash((self.name, self.flavor))

    def __repr__(self):
        return f"FieldPreset({self.name})"

    def zero(self):
        return self.flavor.zero()

    def one(self):
        return self.flavor.one()

    def scalar(self, value):
        if isinstance(value, ParamScalar):
            return value
        return self.flavor.from_fraction(value)

    def generator(self, name: str):
        if name == "s":
            return self.flavor.generator("s")
        raise KeyError(name)

    def generator_names(self):
        return ("s",)

    def compat_generators(self):
        s = self.generator("s")
        return [("s", s), ("s^-1", s.inverse()), ("1", self.one())]

    def descriptor(self):
        return BaseRingDescriptor(
            kind=self.kind, name=self.name, flavor=str(self.flavor),
            generators=self.generator_names(),
            automorphisms=tuple(self._automorphism_text(i) for i in (1, 2)),
            derivations=tuple(f"delta{i}: {self.derivations[i].kind}" for i in (1, 2)),
        )

    def _automorphism_text(self, index: int) -> str:
        spec = self.automorphisms[index]
        if spec.is_identity:
            return f"tau{index}: id"
        return f"tau{index}: s->{spec.image.text()}"

    def _tau(self, index, u, inverse=False):
        if index not in self.automorphisms:
            raise UndefinedEndomorphismError(f"{self.name} has no tau_{index}")
        spec = self.automorphisms[index]
        return spec.apply_inverse(u) if inverse else spec.apply(u)

    def delta(self, index, u):
        if index not in self.derivations:
            raise UndefinedEndomorphismError(f"{self.name} has no delta_{index}")
        return self.derivations[index].apply(u)

    def tau_is_identity(self, index):
        return self.automorphisms[index].is_identity

    def delta_is_zero(self, index):
        return self.derivations[index].is_zero


#################### PRESETS ####################
def order_two_preset() -> FieldPreset:
    """Q(s) with tau: s -> -s on both letters and delta = 0."""
    flavor = ratfunc_flavor(0)
    s = flavor.generator("s")
    sigma = FieldAutomorphismSpec("sigma", -s, -s)
    zero = DerivationSpec("0", ZERO_DERIVATION, sigma)
    return FieldPreset("QS-order2", flavor, (sigma, sigma), (zero, zero))


def dds_preset() -> FieldPreset:
    """F_2(s) with tau = id and delta = d/ds on both letters."""
    flavor = ratfunc_flavor(2)
    dds = DerivationSpec("d/ds", DDS_DERIVATION, IDENTITY_AUTOMORPHISM)
    return FieldPreset("F2S-dds", flavor, (IDENTITY_AUTOMORPHISM, IDENTITY_AUTOMORPHISM), (dds, dds))


def zero_derivation_preset() -> FieldPreset:
    """F_2(s) with tau = id and delta = 0; every derivation here is inner."""
    flavor = ratfunc_flavor(2)
    zero = DerivationSpec("0", ZERO_DERIVATION, IDENTITY_AUTOMORPHISM)
    return FieldPreset("F2S-zero", flavor, (IDENTITY_AUTOMORPHISM, IDENTITY_AUTOMORPHISM), (zero, zero))


def quadratic_constants(ring: FieldPreset) -> Dict[str, object]:
    """a = c = 0, b = s^2, d = s^2 + 1: the quadratic data shared by every shipped field preset."""
    s = ring.generator("s")
    return {"a": ring.zero(), "b": s * s, "c": ring.zero(), "d": s * s + 1}


FIELD_PRESETS = {
    "QS-order2": order_two_preset,
    "F2S-dds": dds_preset,
    "F2S-zero": zero_derivation_preset,
}

PRESET_ALIASES = {"F1": "QS-order2", "F2": "F2S-dds"}


def field_preset(name: str) -> FieldPreset:
    name = PRESET_ALIASES.get(name, name)
    try:
        return FIELD_PRESETS[name]()
    except KeyError:
        raise UnknownContextError(f"unknown field preset '{name}'") from None


def field_quadratics(ring: FieldPreset) -> Tuple[QuadraticData, QuadraticData]:
    constants = quadratic_constants(ring)
    first = QuadraticData(ring, 1, constants["a"], constants["b"], "x")
    second = QuadraticData(ring, 2, constants["c"], constants["d"], "y")
    return first, second


def field_instance(name: str) -> AmalgamInstance:
    """The amalgam over a shipped field preset, normality-checked."""
    ring = field_preset(name)
    first, second = field_quadratics(ring)
    return AmalgamInstance(ring.name, ring, first, second)
