"""
Named evaluation contexts for the command line: which ring an expression lives in,
which symbols it may use and which of them may carry negative exponents.
"""
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Optional

from core import user_config
from core.amalgam import AmalgamInstance
from core.daha import DahaCalculator, daha_quadratics
from core.errors import ExpressionError, UnknownContextError
from core.expression import Environment, evaluate, parse_expression
from core.fields import (FIELD_PRESETS, PRESET_ALIASES, field_instance,
                         field_preset, field_quadratics)
from core.ore import QuadraticData
from core.scalars import ParameterSet
from core.torus import QuantumTorus

OUTPUT_FORMATS = ("text", "json")

_ASSIGNMENT = re.compile(r"^\s*(q|h|t)\s*=\s*(-?\d+(?:/\d+)?)\s*$")


def parse_params(text: str, prime: int = 0) -> ParameterSet:
    """'generic' or 'q=2,h=3' (optionally over F_prime); t=v is read as h^2 = v only for perfect squares."""
    text = (text or "generic").strip()
    if text == "generic":
        return ParameterSet.generic()
    values: Dict[str, Fraction] = {}
    for piece in text.split(","):
        match = _ASSIGNMENT.match(piece)
        if not match:
            raise ExpressionError(f"cannot read parameter assignment '{piece.strip()}'")
        values[match.group(1)] = Fraction(match.group(2))
    if "t" in values and "h" not in values:
        t = values.pop("t")
        root = _rational_sqrt(t)
        if root is None:
            raise ExpressionError(f"t = {t} has no rational square root; assign h instead")
        values["h"] = root
    if "q" not in values or "h" not in values:
        raise ExpressionError("a specialization needs values for both q and h")
    return ParameterSet.specialized(values["q"], values["h"], prime)


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = _int_sqrt(value.numerator), _int_sqrt(value.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_sqrt(n: int) -> Optional[int]:
    root = int(round(n ** 0.5))
    for candidate in (root - 1, root, root + 1):
        if candidate >= 0 and candidate * candidate == n:
            return candidate
    return None


#################### RUN CONFIGURATION ####################
@dataclass(frozen=True)
class RunConfig:
    context: str = "daha"
    params: ParameterSet = field(default_factory=ParameterSet.generic)
    output_format: str = "text"
    seed: int = user_config.FALLBACK_DEFAULTS["seed"]
    strict_schema: bool = False
    extra_depth: int = user_config.FALLBACK_DEFAULTS["saturation_extra_depth"]

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {', '.join(OUTPUT_FORMATS)}")
        canonical_context(self.context)

    @classmethod
    def from_settings(cls, context: Optional[str] = None, params: Optional[str] = None,
                      prime: int = 0, output_format: Optional[str] = None,
                      seed: Optional[int] = None) -> "RunConfig":
        """Flags first, then SKEWALG_* variables, then the user file, then repository defaults."""
        settings = user_config.effective_settings()
        return cls(
            context=context or settings["context"],
            params=parse_params(params or "generic", prime),
            output_format=output_format or settings["output_format"],
            seed=int(seed) if seed is not None else user_config.get_seed(),
            strict_schema=user_config.strict_schema_enabled(),
            extra_depth=int(settings["saturation_extra_depth"]),
        )


#################### CONTEXTS ####################
@dataclass
class Context:
    name: str
    description: str
    env: Environment
    instance: Optional[AmalgamInstance] = None
    calculator: Optional[DahaCalculator] = None

    def parse(self, text: str):
        return parse_expression(text, self.env.symbols, self.env.invertible)

    def evaluate(self, text: str):
        return evaluate(self.parse(text), self.env)


def torus_environment(torus: QuantumTorus) -> Environment:
    values = {name: torus.generator(name) for name in torus.generator_names()}
    values["q"] = torus.scalar(torus.params.q)
    values["h"] = torus.scalar(torus.params.h)
    inverses = {name: (lambda v=value: v.inverse()) for name, value in values.items()}
    return Environment(values, inverses, torus.one())


def field_environment(instance: AmalgamInstance) -> Environment:
    ring = instance.ring
    s = ring.generator("s")
    values = {"s": instance.scalar(s), "x": instance.letter("x"), "y": instance.letter("y")}
    inverses: Dict[str, Callable] = {"s": lambda: instance.scalar(s.inverse())}
    for letter in ("x", "y"):
        if ring.is_unit(instance.quad(letter).b):
            inverses[letter] = (lambda z=letter: instance.letter_inverse(z))
    return Environment(values, inverses, instance.one())


def _torus_context(config: RunConfig) -> Context:
    torus = QuantumTorus(config.params)
    return Context("torus3", f"quantum torus at {config.params.describe()}", torus_environment(torus))


def _daha_context(config: RunConfig) -> Context:
    calculator = DahaCalculator(config.params)
    return Context("daha", f"DAHA of GL2 at {config.params.describe()}", calculator.env,
                   calculator.instance, calculator)


def _field_context(name: str) -> Callable[[RunConfig], Context]:
    def build(config: RunConfig) -> Context:
        instance = field_instance(name)
        return Context(name, f"amalgam over {instance.ring.descriptor().flavor}",
                       field_environment(instance), instance)
    return build


CONTEXTS: Dict[str, Callable[[RunConfig], Context]] = {
    "torus3": _torus_context,
    "daha": _daha_context,
}
CONTEXTS.update({name: _field_context(name) for name in FIELD_PRESETS})

CONTEXT_ALIASES = dict(PRESET_ALIASES)


def canonical_context(name: str) -> str:
    name = CONTEXT_ALIASES.get(name, name)
    if name not in CONTEXTS:
        known = ", ".join(sorted(list(CONTEXTS) + list(CONTEXT_ALIASES)))
        raise UnknownContextError(f"unknown context '{name}' (known: {known})")
    return name


def build_context(config: RunConfig) -> Context:
    return CONTEXTS[canonical_context(config.context)](config)


def parse(text: str, config: RunConfig, context: Optional[Context] = None):
    """Parse against the symbols of the configured context (built unless one is passed in)."""
    return (context or build_context(config)).parse(text)


def print_canonical(element) -> str:
    return element.text()


#################### COMPATIBILITY TARGETS ####################
def compat_targets(name: str, params: Optional[ParameterSet] = None) -> Dict[str, QuadraticData]:
    """The quadratic data checked by ``compat-check``; ``torus-bad`` is the crafted failure."""
    if name == "daha":
        first, second = daha_quadratics(params)
        return {"x": first, "y": second}
    if name == "torus-bad":
        torus = QuantumTorus(params or ParameterSet.generic())
        return {"y": QuadraticData(torus, 2, torus.zero(), torus.generator("z1"), "y")}
    try:
        first, second = field_quadratics(field_preset(name))
    except UnknownContextError:
        raise UnknownContextError(f"no compatibility target named '{name}'") from None
    return {"x": first, "y": second}


COMPAT_TARGETS = ("daha", "torus-bad") + tuple(FIELD_PRESETS) + tuple(PRESET_ALIASES)
