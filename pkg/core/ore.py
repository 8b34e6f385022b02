"""
Skew polynomials R[x; tau, delta] with left coefficients and the quadratic quotient
R[x; tau, delta] / <x^2 - a x - b>.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from core.errors import CompatibilityError, ContextMismatchError
from core.logger import log
from core.rings import BaseRing


class SkewPoly:
    """Dense left-coefficient list c0 + c1 x + ... + cn x^n over (ring, tau_i, delta_i)."""

    __slots__ = ("ring", "index", "coeffs")

    def __init__(self, ring: BaseRing, index: int, coeffs: Sequence):
        self.ring = ring
        self.index = index
        coeffs = [ring.scalar(c) if isinstance(c, int) else c for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, ring: BaseRing, index: int, r) -> "SkewPoly":
        return cls(ring, index, [r])

    @classmethod
    def variable(cls, ring: BaseRing, index: int) -> "SkewPoly":
        return cls(ring, index, [ring.zero(), ring.one()])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int):
        return self.coeffs[k] if k < len(self.coeffs) else self.ring.zero()

    def _check(self, other: "SkewPoly"):
        if other.ring != self.ring or other.index != self.index:
            raise ContextMismatchError("skew polynomials over different (R, tau, delta)")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, self.index,
                        [self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def __neg__(self):
        return SkewPoly(self.ring, self.index, [-c for c in self.coeffs])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, SkewPoly) and other.ring == self.ring and \
            other.index == self.index and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.index, self.coeffs))

    def left_x(self) -> "SkewPoly":
        """x * self, via x r = tau(r) x + delta(r)."""
        out = [self.ring.zero()] * (len(self.coeffs) + 1)
        for k, c in enumerate(self.coeffs):
            out[k + 1] = out[k + 1] + self.ring.tau(self.index, c)
            out[k] = out[k] + self.ring.delta(self.index, c)
        return SkewPoly(self.ring, self.index, out)

    def scale_left(self, r) -> "SkewPoly":
        return SkewPoly(self.ring, self.index, [r * c for c in self.coeffs])

    def text(self, letter: str = "x") -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            if k == 0:
                pieces.append(f"({c.text()})")
            else:
                power = letter if k == 1 else f"{letter}^{k}"
                pieces.append(f"({c.text()})*{power}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"SkewPoly({self.text()})"


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """f * g with x^k r expanded by k applications of x r = tau(r) x + delta(r)."""
    f._check(g)
    result = SkewPoly(f.ring, f.index, [])
    for i, fi in enumerate(f.coeffs):
        if fi.is_zero():
            continue
        shifted = g
        for _ in range(i):
            shifted = shifted.left_x()
        result = result + shifted.scale_left(fi)
    return result


@dataclass(frozen=True)
class QuadraticData:
    """x^2 - a x - b over (ring, tau_index, delta_index), the letter tied to ``index``."""

    ring: BaseRing
    index: int
    a: object
    b: object
    letter: str = "x"

    def relator(self) -> SkewPoly:
        return SkewPoly(self.ring, self.index, [-self.b, -self.a, self.ring.one()])


@dataclass
class IdentityCheck:
    identity: str
    lhs: str
    rhs: str
    passed: bool

    def as_dict(self):
        return {"identity": self.identity, "lhs": self.lhs, "rhs": self.rhs, "passed": self.passed}


@dataclass
class CompatReport:
    """Outcome of the normality check; closure of {r : N r = tau^2(r) N} makes generators suffice."""

    relator: str
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[IdentityCheck]:
        for check in self.checks:
            if not check.passed:
                return check
        return None

    def as_dict(self):
        failure = self.first_failure
        return {
            "relator": self.relator,
            "passed": self.passed,
            "checks": [check.as_dict() for check in self.checks],
            "first_failure": failure.as_dict() if failure else None,
        }


def quadratic_compat_check(qd: QuadraticData) -> CompatReport:
    """N r = tau^2(r) N for each ring generator r, then N x = (x + tau(a) - a) N."""
    ring, index, letter = qd.ring, qd.index, qd.letter
    n_poly = qd.relator()
    report = CompatReport(relator=n_poly.text(letter))

    for label, r in ring.compat_generators():
        lhs = skew_mul(n_poly, SkewPoly.constant(ring, index, r))
        tau2_r = ring.tau(index, ring.tau(index, r))
        rhs = skew_mul(SkewPoly.constant(ring, index, tau2_r), n_poly)
        passed = lhs == rhs
        report.checks.append(IdentityCheck(
            f"N*{label} = tau{index}^2({label})*N", lhs.text(letter), rhs.text(letter), passed))
        if not passed:
            log("warn", f"normality fails for {report.relator} at r = {label}")
            return report

    x = SkewPoly.variable(ring, index)
    lhs = skew_mul(n_poly, x)
    shift = ring.tau(index, qd.a) - qd.a
    rhs = skew_mul(SkewPoly(ring, index, [shift, ring.one()]), n_poly)
    passed = lhs == rhs
    report.checks.append(IdentityCheck(
        f"N*{letter} = ({letter} + tau{index}(a) - a)*N", lhs.text(letter), rhs.text(letter), passed))
    if not passed:
        log("warn", f"normality fails for {report.relator} at r = {letter}")
    return report


def require_compatible(qd: QuadraticData) -> CompatReport:
    report = quadratic_compat_check(qd)
    if not report.passed:
        raise CompatibilityError(f"quadratic data {report.relator} is not normal", report)
    return report


def quotient_reduce(f: SkewPoly, qd: QuadraticData) -> SkewPoly:
    """The unique r0 + r1 x congruent to f modulo the two-sided ideal generated by N."""
    if f.ring != qd.ring or f.index != qd.index:
        raise ContextMismatchError("polynomial and quadratic data live over different contexts")
    n_poly = qd.relator()
    while f.degree >= 2:
        top = f.coeffs[-1]
        # top x^k = top x^(k-2) N + lower terms
        multiple = SkewPoly.constant(f.ring, f.index, f.ring.one())
        for _ in range(f.degree - 2):
            multiple = multiple.left_x()
        f = f - skew_mul(multiple, n_poly).scale_left(top)
    return f
