"""
Seeded property suites: the algebraic identities the engines rely on, checked on random data.
"""
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from core.amalgam import to_left_form, to_right_form
from core.contexts import compat_targets
from core.daha import DahaCalculator, build_daha_instance
from core.errors import SkewAlgError
from core.fields import field_instance
from core.ideals import (DEFAULT_EXTRA_DEPTH, LEFT, TWO_SIDED, GeneratorSet,
                         is_member, minimize, minimize_one_sided,
                         minimize_two_sided, reduce_mod)
from core.logger import log
from core.ore import quadratic_compat_check
from core.sampling import (random_amalgam, random_coefficient,
                           random_generator_list, random_specialization,
                           random_torus, random_word_element)
from core.scalars import (LAURENT_FLAVOR, RATIONAL_FLAVOR, ParameterSet,
                          prime_flavor, ratfunc_flavor)
from core.torus import QuantumTorus
from core.words import leading, leading_twist, word_mul


def _case_text(value) -> str:
    return value.text() if hasattr(value, "text") else str(value)


@dataclass
class PropertyCheck:
    """A named predicate run on generated cases; failures keep the offending case's text."""

    name: str
    predicate: Callable[..., bool]
    generate: Callable[[random.Random], Tuple]
    describe: Callable[..., str] = lambda *case: ", ".join(_case_text(c) for c in case)
    failures: List[str] = field(default_factory=list)
    cases: int = 0

    def run(self, rng: random.Random, count: int) -> bool:
        for _ in range(count):
            case = self.generate(rng)
            self.cases += 1
            try:
                ok = self.predicate(*case)
            except SkewAlgError as err:
                ok = False
                log("error", f"{self.name} raised {type(err).__name__}: {err}")
            if not ok:
                self.failures.append(self.describe(*case))
        return not self.failures

    def failure_count(self) -> int:
        return len(self.failures)

    def as_dict(self) -> Dict:
        return {"name": self.name, "cases": self.cases, "failures": self.failure_count(),
                "first_failure": self.failures[0] if self.failures else None}


#################### SUITES ####################
def _scalar_checks() -> List[PropertyCheck]:
    checks = []
    for flavor in (RATIONAL_FLAVOR, prime_flavor(7), LAURENT_FLAVOR, ratfunc_flavor(0), ratfunc_flavor(2)):
        def triple(rng, flavor=flavor):
            return tuple(random_coefficient(rng, flavor) for _ in range(3))

        def ring_axioms(a, b, c):
            return (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c) \
                and a * (b + c) == a * b + a * c and a * b == b * a and (a - a).is_zero()

        def units(a, b, c):
            return all((u * u.inverse()).is_one() for u in (a, b, c) if u.is_unit())

        checks.append(PropertyCheck(f"scalar ring axioms over {flavor}", ring_axioms, triple))
        checks.append(PropertyCheck(f"scalar units over {flavor}", units, triple))
    return checks


def _torus_checks(params: ParameterSet) -> List[PropertyCheck]:
    torus = QuantumTorus(params)

    def pair(rng):
        return random_torus(rng, torus), random_torus(rng, torus)

    def leibniz(u, v):
        return torus.check_twisted_leibniz([(u, v)])

    def endomorphisms(u, v):
        return all(torus.tau(i, u * v) == torus.tau(i, u) * torus.tau(i, v)
                   and torus.tau_inverse(i, torus.tau(i, u)) == u for i in (1, 2))

    return [PropertyCheck(f"twisted Leibniz for delta1 ({params.describe()})", leibniz, pair),
            PropertyCheck(f"tau1, tau2 are automorphisms ({params.describe()})", endomorphisms, pair)]


def _compat_checks() -> List[PropertyCheck]:
    targets = [("daha", True), ("QS-order2", True), ("F2S-dds", True), ("F2S-zero", True), ("torus-bad", False)]

    def passes_as_expected(name, expected):
        return all(quadratic_compat_check(qd).passed == expected for qd in compat_targets(name).values())

    return [PropertyCheck(f"normality of the {name} quadratics", passes_as_expected,
                          lambda rng, n=name, e=expected: (n, e), describe=lambda n, e: n)
            for name, expected in targets]


def _instance_checks(name: str, instance, max_degree: int) -> List[PropertyCheck]:
    def triple(rng):
        return tuple(random_amalgam(rng, instance, rng.randint(0, max_degree)) for _ in range(3))

    def single(rng):
        return (random_amalgam(rng, instance, rng.randint(0, max_degree + 1)),)

    def associative(f, g, h):
        return (f * g) * h == f * (g * h)

    def round_trip(f):
        return to_left_form(to_right_form(f)) == f

    return [PropertyCheck(f"associativity in {name}", associative, triple),
            PropertyCheck(f"left/right form round trip in {name}", round_trip, single)]


def _leading_term_check(params: ParameterSet) -> PropertyCheck:
    torus = QuantumTorus(params)

    def pair(rng):
        return random_word_element(rng, torus), random_word_element(rng, torus)

    def leading_law(f, g):
        (r1, w1), (r2, w2) = leading(f), leading(g)
        coeff, word = leading(word_mul(f, g))
        expected = r1 * torus.apply_endo(leading_twist(w1), r2)
        return word == w1 + w2 and coeff == expected and not coeff.is_zero()

    return PropertyCheck("leading-term law in the free product", leading_law, pair)


def _daha_checks() -> List[PropertyCheck]:
    def generic(rng):
        return (ParameterSet.generic(),)

    def rational(rng):
        return (random_specialization(rng),)

    def mod7(rng):
        return (random_specialization(rng, 7),)

    def verified(params):
        return DahaCalculator(params).verify().passed

    return [PropertyCheck("DAHA relations and round trips, generic", verified, generic,
                          describe=lambda p: p.describe()),
            PropertyCheck("DAHA relations at rational points", verified, rational,
                          describe=lambda p: p.describe()),
            PropertyCheck("DAHA relations over F_7", verified, mod7,
                          describe=lambda p: p.describe())]


def _ideal_checks() -> List[Tuple[PropertyCheck, int]]:
    f1 = field_instance("QS-order2")
    f2 = field_instance("F2S-dds")

    def left_set(rng):
        return (GeneratorSet(f1, random_generator_list(rng, f1, max_count=3, max_degree=3), LEFT),)

    def two_sided_set(rng):
        return (GeneratorSet(f2, random_generator_list(rng, f2, max_count=3, max_degree=3), TWO_SIDED),)

    def element_and_set(rng):
        gens = random_generator_list(rng, f1, max_count=2, max_degree=2)
        f = random_amalgam(rng, f1, rng.randint(0, 2))
        if rng.random() < 0.5:
            f = f * gens[0]
        return f, GeneratorSet(f1, gens, LEFT)

    def one_sided(gens):
        if not gens.indexed():
            return True
        certificate = minimize_one_sided(gens)
        return certificate.verified and len(certificate.outputs) <= 2

    def two_sided(gens):
        if not gens.indexed():
            return True
        certificate = minimize_two_sided(gens)
        return certificate.verified and len(certificate.outputs) == 1

    def remainder_matches_oracle(f, gens):
        reduced = reduce_mod(f, gens, complete=True).remainder.is_zero()
        return reduced == is_member(f, gens, f.degree + DEFAULT_EXTRA_DEPTH)

    def idempotent(gens):
        if not gens.indexed():
            return True
        first = minimize(gens)
        again = minimize(GeneratorSet(gens.instance, first.outputs, gens.side))
        if not again.verified or len(again.outputs) > len(first.outputs):
            return False
        return len(first.outputs) > 1 or gens.side == TWO_SIDED or again.outputs == first.outputs

    describe = lambda gens: "{" + ", ".join(gens.texts()) + "}"
    return [
        (PropertyCheck("one-sided reduction certificates on F1", one_sided, left_set, describe=describe), 100),
        (PropertyCheck("reduce_mod remainder agrees with membership on F1", remainder_matches_oracle,
                       element_and_set, describe=lambda f, gens: f"{f.text()} mod {describe(gens)}"), 100),
        (PropertyCheck("one-sided reduction is idempotent on F1", idempotent, left_set, describe=describe), 25),
        (PropertyCheck("two-sided principality on F2", two_sided, two_sided_set, describe=describe), 50),
        (PropertyCheck("two-sided reduction is idempotent on F2", idempotent, two_sided_set,
                       describe=describe), 10),
    ]


FULL_SCALE = 200

SUITES: Dict[str, Callable[[], List[Tuple[PropertyCheck, int]]]] = {
    "scalars": lambda: [(check, 200) for check in _scalar_checks()],
    "torus": lambda: [(check, 200) for check in _torus_checks(ParameterSet.generic())],
    "compat": lambda: [(check, 1) for check in _compat_checks()],
    "amalgam": lambda: [(check, 200) for check in
                        _instance_checks("daha", build_daha_instance(), 1)
                        + _instance_checks("F1", field_instance("QS-order2"), 2)
                        + _instance_checks("F2", field_instance("F2S-dds"), 2)],
    "words": lambda: [(_leading_term_check(ParameterSet.generic()), 200)],
    "daha": lambda: list(zip(_daha_checks(), (1, 5, 5))),
    "ideals": _ideal_checks,
}


def scaled_count(full: int, cases: Optional[int]) -> int:
    """``full`` when no count is given; otherwise ``cases`` scaled by full / FULL_SCALE, at least 1."""
    if cases is None:
        return full
    return max(1, full * cases // FULL_SCALE)


@dataclass
class SelftestReport:
    seed: int
    checks: List[PropertyCheck]

    @property
    def passed(self) -> bool:
        return all(check.failure_count() == 0 for check in self.checks)

    def as_dict(self) -> Dict:
        return {"seed": self.seed, "passed": self.passed,
                "suites": [check.as_dict() for check in self.checks]}


def run_selftest(seed: int, cases: Optional[int] = None,
                 suites: Optional[Iterable[str]] = None) -> SelftestReport:
    """Run the named suites (all by default) with one RNG per suite derived from ``seed``.

    Without ``cases`` every property runs at its full size (200 random cases for the
    arithmetic laws, 100 one-sided and 50 two-sided generator sets, 5 specializations).
    """
    names: Sequence[str] = list(suites) if suites else list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown selftest suite(s): {', '.join(unknown)}")
    report = SelftestReport(seed, [])
    for offset, name in enumerate(names):
        rng = random.Random(seed * 1000 + offset)
        for check, full in SUITES[name]():
            check.run(rng, scaled_count(full, cases))
            report.checks.append(check)
            level = "info" if not check.failures else "warn"
            log(level, f"{check.name}: {check.cases - check.failure_count()}/{check.cases} passed")
    return report
