"""
The double affine Hecke algebra H_{q,t}(GL2) as the amalgam Q1 *_R Q2 over the quantum torus.

    T -> x + alpha,  X1 -> z1,  X2 -> z2,  Y1 -> z3 (x + alpha) y,  Y2 -> z3 y (x - alpha)

with alpha = (h - h^-1)/2, beta = (h + h^-1)/2, x^2 = beta^2 and y^2 = z3^-1.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from core.amalgam import AmalgamElement, AmalgamInstance
from core.errors import ExpressionError
from core.expression import (Environment, evaluate, parse_expression,
                             substitute)
from core.logger import log
from core.ore import QuadraticData
from core.scalars import ParameterSet
from core.torus import QuantumTorus

DAHA_GENERATORS = ("T", "X1", "X2", "Y1", "Y2")
AMALGAM_GENERATORS = ("z1", "z2", "z3", "x", "y")

ALPHA = "((1/2)*h - (1/2)*h^-1)"

# phi-tilde: DAHA -> Q
IMAGE_FORMULAS = {
    "T": f"x + {ALPHA}",
    "X1": "z1",
    "X2": "z2",
    "Y1": f"z3*(x + {ALPHA})*y",
    "Y2": f"z3*y*(x - {ALPHA})",
}

INVERSE_FORMULAS = {
    "T": f"x - {ALPHA}",
    "X1": "z1^-1",
    "X2": "z2^-1",
    "Y1": f"z3*y*(x - {ALPHA})*z3^-1",
    "Y2": f"(x + {ALPHA})*z3*y*z3^-1",
}

# phi: Q -> DAHA
PREIMAGE_FORMULAS = {
    "z1": "X1",
    "z2": "X2",
    "z3": "Y1*Y2",
    "x": f"T - {ALPHA}",
    "y": "Y1^-1*T",
}

DAHA_RELATIONS: List[Tuple[str, str]] = [
    ("X1*X2", "X2*X1"),
    ("Y1*Y2", "Y2*Y1"),
    ("(T - h)*(T + h^-1)", "0"),
    ("Y2^-1*X1*Y2*X1^-1", "T^2"),
    ("T^-1*Y1*T^-1", "Y2"),
    ("T*X1*T", "X2"),
    ("Y1*Y2*X1", "q*X1*Y1*Y2"),
    ("Y1*Y2*X2", "q*X2*Y1*Y2"),
    ("X1*X2*Y1", "q^-1*Y1*X1*X2"),
    ("X1*X2*Y2", "q^-1*Y2*X1*X2"),
]


def daha_quadratics(params: Optional[ParameterSet] = None) -> Tuple[QuadraticData, QuadraticData]:
    """x^2 - beta^2 over (tau1, delta1) and y^2 - z3^-1 over (tau2, 0)."""
    torus = QuantumTorus(params or ParameterSet.generic())
    beta = torus.scalar(torus.params.beta)
    first = QuadraticData(torus, 1, torus.zero(), beta * beta, "x")
    second = QuadraticData(torus, 2, torus.zero(), torus.generator("z3").inverse(), "y")
    return first, second


def build_daha_instance(params: Optional[ParameterSet] = None) -> AmalgamInstance:
    """Q1 = R[x; tau1, delta1]/<x^2 - beta^2>, Q2 = R[y; tau2, 0]/<y^2 - z3^-1>."""
    first, second = daha_quadratics(params)
    log("debug", f"building the DAHA instance at {first.ring.params.describe()}")
    return AmalgamInstance("daha", first.ring, first, second)


def amalgam_environment(instance: AmalgamInstance) -> Environment:
    """Symbols z1, z2, z3, x, y, q, h of an instance over the quantum torus."""
    torus = instance.ring
    values = {name: instance.generator(name) for name in AMALGAM_GENERATORS}
    values["q"] = instance.scalar(torus.params.q)
    values["h"] = instance.scalar(torus.params.h)
    inverses = {
        "z1": lambda: instance.scalar(torus.generator("z1").inverse()),
        "z2": lambda: instance.scalar(torus.generator("z2").inverse()),
        "z3": lambda: instance.scalar(torus.generator("z3").inverse()),
        "q": lambda: instance.scalar(torus.params.q.inverse()),
        "h": lambda: instance.scalar(torus.params.h.inverse()),
        "y": lambda: instance.letter_inverse("y"),
    }
    if torus.is_unit(instance.quad("x").b):
        inverses["x"] = lambda: instance.letter_inverse("x")
    return Environment(values, inverses, instance.one())


@dataclass
class DahaImage:
    instance: AmalgamInstance
    images: Dict[str, AmalgamElement]
    inverses: Dict[str, AmalgamElement]
    unit_checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def units_verified(self) -> bool:
        return all(self.unit_checks.values()) and len(self.unit_checks) == len(DAHA_GENERATORS)

    def environment(self) -> Environment:
        """Amalgam symbols plus T, X1, X2, Y1, Y2 and their inverses."""
        env = amalgam_environment(self.instance)
        env.values.update(self.images)
        for name in DAHA_GENERATORS:
            env.inverses[name] = (lambda n=name: self.inverses[n])
        return env


def build_images(instance: AmalgamInstance) -> DahaImage:
    env = amalgam_environment(instance)
    images = {name: evaluate(parse_expression(text), env) for name, text in IMAGE_FORMULAS.items()}
    inverses = {name: evaluate(parse_expression(text), env) for name, text in INVERSE_FORMULAS.items()}
    result = DahaImage(instance, images, inverses)
    one = instance.one()
    for name in DAHA_GENERATORS:
        ok = images[name] * inverses[name] == one and inverses[name] * images[name] == one
        result.unit_checks[name] = ok
        if not ok:
            log("error", f"the image of {name} is not inverted by its inverse formula")
    return result


@dataclass
class RelationRecord:
    relation: str
    lhs: str
    rhs: str
    passed: bool
    kind: str = "relation"

    def as_dict(self):
        return {"relation": self.relation, "kind": self.kind, "lhs": self.lhs,
                "rhs": self.rhs, "passed": self.passed}


@dataclass
class RelationReport:
    params: str
    records: List[RelationRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    def as_dict(self):
        return {"params": self.params, "passed": self.passed,
                "records": [record.as_dict() for record in self.records]}


class DahaCalculator:
    """Normal forms of DAHA expressions through the images above."""

    def __init__(self, params: Optional[ParameterSet] = None, instance: Optional[AmalgamInstance] = None):
        self.instance = instance or build_daha_instance(params)
        self.params = self.instance.ring.params
        self.images = build_images(self.instance)
        self.env = self.images.environment()

    def normal_form(self, text: str) -> AmalgamElement:
        expr = parse_expression(text, self.env.symbols, self.env.invertible)
        return evaluate(expr, self.env)

    def check_relation(self, lhs: str, rhs: str) -> RelationRecord:
        left, right = self.normal_form(lhs), self.normal_form(rhs)
        return RelationRecord(f"{lhs} = {rhs}", left.text(), right.text(), left == right)

    def round_trip_from_amalgam(self, name: str) -> RelationRecord:
        """phi-tilde(phi(g)) = g for an amalgam generator g."""
        value = self.normal_form(PREIMAGE_FORMULAS[name])
        target = self.env.lookup(name)
        return RelationRecord(f"phi~(phi({name})) = {name}", value.text(), target.text(),
                              value == target, kind="round-trip")

    def round_trip_from_daha(self, name: str) -> RelationRecord:
        """phi(phi-tilde(G)) = G by formal substitution of the preimages into the image of G."""
        mapping = {g: parse_expression(PREIMAGE_FORMULAS[g]) for g in AMALGAM_GENERATORS}
        substituted = substitute(parse_expression(IMAGE_FORMULAS[name]), mapping)
        value = evaluate(substituted, self.env)
        target = self.images.images[name]
        return RelationRecord(f"phi(phi~({name})) = {name}", value.text(), target.text(),
                              value == target, kind="round-trip")

    def verify(self, extra_relations: Sequence[Tuple[str, str]] = ()) -> RelationReport:
        report = RelationReport(self.params.describe())
        for lhs, rhs in list(DAHA_RELATIONS) + list(extra_relations):
            report.records.append(self.check_relation(lhs, rhs))
        for name in AMALGAM_GENERATORS:
            report.records.append(self.round_trip_from_amalgam(name))
        for name in DAHA_GENERATORS:
            report.records.append(self.round_trip_from_daha(name))
        for record in report.records:
            if not record.passed:
                log("warn", f"identity fails: {record.relation}",
                    detail=f"lhs = {record.lhs}\nrhs = {record.rhs}")
        return report


def verify_isomorphism(params: Optional[ParameterSet] = None,
                       extra_relations: Sequence[Tuple[str, str]] = ()) -> RelationReport:
    return DahaCalculator(params).verify(extra_relations)


def daha_normal_form(text: str, params: Optional[ParameterSet] = None) -> AmalgamElement:
    return DahaCalculator(params).normal_form(text)


def parse_relation(text: str) -> Tuple[str, str]:
    """'lhs = rhs' -> (lhs, rhs); a bare expression means expression = 0."""
    if text.count("=") > 1:
        raise ExpressionError("a relation has at most one '='", text.index("=", text.index("=") + 1))
    if "=" not in text:
        return text.strip(), "0"
    lhs, rhs = text.split("=")
    return lhs.strip(), rhs.strip()
