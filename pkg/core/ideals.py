"""
One-sided and two-sided ideals of Q over a division-ring base K.

A left ideal is the left K-span of the multiples w*g, a right ideal the right K-span of
g*w, a two-sided ideal the left K-span of everything reachable from both sides.
The leading data of a degree-m element is its pair of coefficients on the two words of
length m, labelled by the letter that multiplication on the ideal's side leaves in place:
the last letter for left ideals (xhat, yhat), the first letter otherwise (x, y).

Every reduction returns cofactors, and every minimization returns a certificate that is
checked by multiplying the cofactors out.
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, Iterable, List, Optional, Sequence, Tuple

from core.amalgam import (AmalgamElement, AmalgamInstance, alt_word, hat_word,
                          to_right_form, word_factor)
from core.errors import (ContextMismatchError, EmptyGeneratorSetError,
                         HypothesisError, IncompleteReductionError)
from core.logger import log
from core.rings import tau_alt
from core.words import Word, word_key

LEFT = "left"
RIGHT = "right"
TWO_SIDED = "two-sided"

SIDE_ALIASES = {
    "L": LEFT, "l": LEFT, LEFT: LEFT,
    "R": RIGHT, "r": RIGHT, RIGHT: RIGHT,
    "2": TWO_SIDED, TWO_SIDED: TWO_SIDED, "both": TWO_SIDED,
}

DEFAULT_EXTRA_DEPTH = 4


def normalize_side(side: str) -> str:
    try:
        return SIDE_ALIASES[str(side)]
    except KeyError:
        raise ValueError(f"unknown ideal side '{side}'; expected L, R or 2") from None


def alternating_words(bound: int) -> List[Word]:
    """1, x, y, xy, yx, ... up to length ``bound``."""
    words = [""]
    for n in range(1, bound + 1):
        words.extend((alt_word("x", n), alt_word("y", n)))
    return words


def _words_of_length(n: int) -> List[Word]:
    return [""] if n == 0 else [alt_word("x", n), alt_word("y", n)]


def _require_division_ring(instance: AmalgamInstance):
    if not instance.ring.is_division_ring:
        raise HypothesisError(f"ideal reduction needs a division-ring base; {instance.ring.name} is not one",
                              {"division_ring": False})


#################### GENERATOR SETS AND COMBINATIONS ####################
@dataclass
class GeneratorSet:
    instance: AmalgamInstance
    elements: List[AmalgamElement]
    side: str = LEFT

    def __post_init__(self):
        self.side = normalize_side(self.side)
        self.elements = list(self.elements)
        for g in self.elements:
            if g.instance != self.instance:
                raise ContextMismatchError("generator from a different instance")

    def indexed(self) -> List[Tuple[int, AmalgamElement]]:
        """Nonzero generators with their positions in ``elements``."""
        return [(i, g) for i, g in enumerate(self.elements) if not g.is_zero()]

    @property
    def max_degree(self) -> int:
        return max((g.degree for _, g in self.indexed()), default=0)

    def texts(self) -> List[str]:
        return [g.text() for g in self.elements]


class Combination:
    """sum of L * g_i * R over a fixed generator list.

    Terms merge on (i, R) for left and two-sided ideals and on (i, L) for right ideals.
    """

    __slots__ = ("instance", "side", "_terms")

    def __init__(self, instance: AmalgamInstance, side: str,
                 triples: Iterable[Tuple[AmalgamElement, int, AmalgamElement]] = ()):
        self.instance = instance
        self.side = side
        merged: Dict[Tuple[int, AmalgamElement], AmalgamElement] = {}
        for left, index, right in triples:
            if left.is_zero() or right.is_zero():
                continue
            key, value = ((index, left), right) if side == RIGHT else ((index, right), left)
            merged[key] = merged[key] + value if key in merged else value
        self._terms = {k: v for k, v in merged.items() if not v.is_zero()}

    @classmethod
    def zero(cls, instance: AmalgamInstance, side: str) -> "Combination":
        return cls(instance, side)

    @classmethod
    def generator(cls, instance: AmalgamInstance, side: str, index: int) -> "Combination":
        one = instance.one()
        return cls(instance, side, [(one, index, one)])

    def triples(self) -> List[Tuple[AmalgamElement, int, AmalgamElement]]:
        out = []
        for (index, fixed), value in self._terms.items():
            out.append((fixed, index, value) if self.side == RIGHT else (value, index, fixed))
        return out

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "Combination") -> "Combination":
        return Combination(self.instance, self.side, self.triples() + other.triples())

    def __neg__(self) -> "Combination":
        return Combination(self.instance, self.side,
                           [(-left, i, right) for left, i, right in self.triples()])

    def __sub__(self, other: "Combination") -> "Combination":
        return self + (-other)

    def left_mul(self, w: AmalgamElement) -> "Combination":
        return Combination(self.instance, self.side,
                           [(w * left, i, right) for left, i, right in self.triples()])

    def right_mul(self, w: AmalgamElement) -> "Combination":
        return Combination(self.instance, self.side,
                           [(left, i, right * w) for left, i, right in self.triples()])

    def scaled(self, c) -> "Combination":
        """Multiply by a base-field scalar on the ideal's own side."""
        if self.side == RIGHT:
            return self.right_mul(self.instance.scalar(c))
        return self.left_mul(self.instance.scalar(c))

    def evaluate(self, generators: Sequence[AmalgamElement]) -> AmalgamElement:
        total = self.instance.zero()
        for left, index, right in self.triples():
            total = total + left * generators[index] * right
        return total

    def as_list(self) -> List[Dict]:
        rows = [{"generator": i, "left": left.text(), "right": right.text()}
                for left, i, right in self.triples()]
        return sorted(rows, key=lambda row: (row["generator"], row["left"], row["right"]))

    def __repr__(self):
        return f"Combination({self.as_list()})"


#################### LINEAR ALGEBRA OVER K ####################
def solve_linear(columns: Sequence[Sequence], target: Sequence, zero) -> Optional[List]:
    """Coefficients c with sum_j c_j columns[j] = target, or None; free unknowns are 0.

    Gauss-Jordan elimination with first-nonzero pivoting, columns in the given order.
    """
    d, k = len(target), len(columns)
    rows = [[columns[j][r] for j in range(k)] + [target[r]] for r in range(d)]
    pivots: List[int] = []
    r = 0
    for col in range(k):
        if r == d:
            break
        pivot = next((i for i in range(r, d) if not rows[i][col].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [value * inv for value in rows[r]]
        for i in range(d):
            if i != r and not rows[i][col].is_zero():
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(not rows[i][k].is_zero() for i in range(r, d)):
        return None
    solution = [zero] * k
    for i, col in enumerate(pivots):
        solution[col] = rows[i][k]
    return solution


def _scale(element: AmalgamElement, c, side: str) -> AmalgamElement:
    if side == RIGHT:
        return element * element.instance.scalar(c)
    return element.scale_left(c)


def _coordinates(element: AmalgamElement, side: str) -> Dict[Word, object]:
    if side == RIGHT:
        return dict(to_right_form(element).terms)
    return dict(element.terms)


def _pair_words(m: int, side: str) -> Tuple[Word, Word]:
    if side == LEFT:
        return hat_word("x", m), hat_word("y", m)
    return alt_word("x", m), alt_word("y", m)


def leading_pair(element: AmalgamElement, m: int, side: str) -> Tuple[object, object]:
    """Coefficients of the two degree-m words in the coordinates of ``side``."""
    if side == LEFT:
        return element.hat_pair(m)
    if side == RIGHT:
        return to_right_form(element).pair(m)
    return element.pair(m)


def _pair_from_vec(vec: Dict[Word, object], m: int, side: str, zero) -> Tuple[object, object]:
    if m == 0:
        return vec.get("", zero), zero
    first, second = _pair_words(m, side)
    return vec.get(first, zero), vec.get(second, zero)


@dataclass
class Row:
    vec: Dict[Word, object]
    element: AmalgamElement
    combination: Combination

    @property
    def pivot(self) -> Word:
        return max(self.vec, key=word_key)

    @property
    def degree(self) -> int:
        return len(self.pivot)

    def __add__(self, other: "Row") -> "Row":
        vec = dict(self.vec)
        for w, c in other.vec.items():
            total = vec[w] + c if w in vec else c
            if total.is_zero():
                vec.pop(w, None)
            else:
                vec[w] = total
        return Row(vec, self.element + other.element, self.combination + other.combination)


class Echelon:
    """Incremental echelon form over K; each row's pivot is its highest word and is 1."""

    def __init__(self, instance: AmalgamInstance, side: str):
        self.instance = instance
        self.side = side
        self.zero = instance.ring.zero()
        self.rows: Dict[Word, Row] = {}

    def __len__(self):
        return len(self.rows)

    def _subtract(self, row: Row, c, other: Row) -> Row:
        vec = dict(row.vec)
        for w, value in other.vec.items():
            total = vec.get(w, self.zero) - c * value
            if total.is_zero():
                vec.pop(w, None)
            else:
                vec[w] = total
        return Row(vec, row.element - _scale(other.element, c, self.side),
                   row.combination - other.combination.scaled(c))

    def reduce(self, element: AmalgamElement, combination: Combination) -> Row:
        """Subtract pivot rows in descending word order until no pivot column remains."""
        row = Row(_coordinates(element, self.side), element, combination)
        passed = set()
        while True:
            open_cols = [w for w in row.vec if w not in passed]
            if not open_cols:
                return row
            col = max(open_cols, key=word_key)
            pivot_row = self.rows.get(col)
            if pivot_row is None:
                passed.add(col)
                continue
            row = self._subtract(row, row.vec[col], pivot_row)

    def insert(self, element: AmalgamElement, combination: Combination) -> Optional[Row]:
        """Add a vector to the span; returns the new normalized row or None if dependent."""
        row = self.reduce(element, combination)
        if not row.vec:
            return None
        lead = row.vec[row.pivot]
        inv = lead.inverse()
        vec = {w: c * inv for w, c in row.vec.items()}
        row = Row(vec, _scale(row.element, inv, self.side), row.combination.scaled(inv))
        self.rows[row.pivot] = row
        return row

    def min_degree(self):
        return min((len(w) for w in self.rows), default=None)

    def rows_of_degree(self, m: int) -> List[Row]:
        rows = [row for w, row in self.rows.items() if len(w) == m]
        return sorted(rows, key=lambda row: word_key(row.pivot), reverse=True)

    def sorted_rows(self) -> List[Row]:
        return sorted(self.rows.values(), key=lambda row: word_key(row.pivot))


#################### REDUCTION ####################
@dataclass
class ReductionResult:
    remainder: AmalgamElement
    combination: Combination
    steps: int = 0
    completed: bool = False

    def __iter__(self):
        return iter((self.remainder, self.combination))


def _candidates(instance: AmalgamInstance, indexed: Sequence[Tuple[int, AmalgamElement]],
                m: int, side: str) -> List[Tuple[AmalgamElement, Combination]]:
    """Multiples of the generators reaching degree m: word factors on the ideal's side, or g at m = n."""
    out: List[Tuple[AmalgamElement, Combination]] = []
    for i, g in indexed:
        n = g.degree
        if n > m:
            continue
        base = Combination.generator(instance, side, i)
        if n == m:
            out.append((g, base))
            continue
        if side in (LEFT, TWO_SIDED):
            for kind in ("xhat", "yhat"):
                w = word_factor(instance, kind, n, m)
                out.append((w * g, base.left_mul(w)))
        if side in (RIGHT, TWO_SIDED):
            for kind in ("x", "y"):
                w = word_factor(instance, kind, n, m)
                out.append((g * w, base.right_mul(w)))
    return [(e, c) for e, c in out if e.degree == m]


def reduce_mod(f: AmalgamElement, generators: GeneratorSet, complete: bool = False,
               bound: Optional[int] = None) -> ReductionResult:
    """Top-reduce f against the generators: f = combination(generators) + remainder.

    With ``complete`` the remainder is further reduced against the span of all multiples
    of degree at most ``bound`` (default deg f + 4), so it is 0 exactly when the bounded
    membership oracle says f belongs to the ideal.
    """
    instance = generators.instance
    _require_division_ring(instance)
    if f.instance != instance:
        raise ContextMismatchError("element and generators come from different instances")
    side = generators.side
    zero = instance.ring.zero()
    indexed = generators.indexed()
    remainder = f
    combination = Combination.zero(instance, side)
    steps = 0
    while not remainder.is_zero():
        m = remainder.degree
        candidates = _candidates(instance, indexed, m, side)
        target = leading_pair(remainder, m, side)
        solution = solve_linear([leading_pair(e, m, side) for e, _ in candidates], target, zero)
        if solution is None:
            break
        for c, (element, comb) in zip(solution, candidates):
            if c.is_zero():
                continue
            remainder = remainder - _scale(element, c, side)
            combination = combination + comb.scaled(c)
        steps += 1
    result = ReductionResult(remainder, combination, steps)
    if complete and not remainder.is_zero():
        bound = f.degree + DEFAULT_EXTRA_DEPTH if bound is None else bound
        span = _membership_span(generators, bound)
        row = span.reduce(remainder, Combination.zero(instance, side))
        result = ReductionResult(row.element, combination - row.combination, steps, completed=True)
    log("debug", f"reduce_mod: {steps} top steps, remainder degree {result.remainder.degree}")
    return result


#################### MEMBERSHIP ORACLES ####################
def _membership_span(generators: GeneratorSet, bound: int) -> Echelon:
    instance, side = generators.instance, generators.side
    span = Echelon(instance, side)
    if side == TWO_SIDED:
        for left, i, right in _two_sided_multiples(generators, bound):
            span.insert(left * generators.elements[i] * right,
                        Combination(instance, TWO_SIDED, [(left, i, right)]))
        return span
    for i, g in generators.indexed():
        base = Combination.generator(instance, side, i)
        for w in alternating_words(bound):
            word = instance.word(w)
            if side == LEFT:
                span.insert(word * g, base.left_mul(word))
            else:
                span.insert(g * word, base.right_mul(word))
    return span


def _two_sided_multiples(generators: GeneratorSet, bound: int):
    instance = generators.instance
    ring = instance.ring
    words = [instance.word(w) for w in alternating_words(bound)]
    scalars = [instance.one()]
    for name in ring.generator_names():
        r = ring.generator(name)
        power = ring.one()
        for _ in range(bound):
            power = power * r
            scalars.append(instance.scalar(power))
    for i, _ in generators.indexed():
        for w1 in words:
            for w2 in words:
                for r in scalars:
                    yield w1, i, w2 * r


def membership_witness(f: AmalgamElement, generators: GeneratorSet, degree_bound: int) -> Optional[Combination]:
    """A combination of bounded multiples equal to f, or None when none exists."""
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    instance = generators.instance
    _require_division_ring(instance)
    if f.is_zero():
        return Combination.zero(instance, generators.side)
    span = _membership_span(generators, degree_bound)
    row = span.reduce(f, Combination.zero(instance, generators.side))
    if not row.element.is_zero():
        return None
    return -row.combination


def is_member(f: AmalgamElement, generators: GeneratorSet, degree_bound: int) -> bool:
    """f lies in the span of w*g (g*w for right ideals) over words of length at most the bound."""
    return membership_witness(f, generators, degree_bound) is not None


def is_member_two_sided(f: AmalgamElement, generators: GeneratorSet, degree_bound: int) -> bool:
    """f lies in the left K-span of w1*g*w2*s^j with |w1|, |w2|, j at most the bound."""
    two_sided = GeneratorSet(generators.instance, generators.elements, TWO_SIDED)
    return membership_witness(f, two_sided, degree_bound) is not None


#################### CERTIFICATES ####################
@dataclass
class ReductionCertificate:
    instance: AmalgamInstance
    side: str
    inputs: List[AmalgamElement]
    outputs: List[AmalgamElement]
    output_combinations: List[Combination]
    input_combinations: List[Optional[Combination]] = field(default_factory=list)
    depth: int = 0
    verified: bool = False
    hypotheses: Optional[Dict] = None

    def verify(self) -> bool:
        """Multiply every cofactor out: outputs from inputs and inputs from outputs."""
        if len(self.input_combinations) != len(self.inputs):
            return False
        for output, comb in zip(self.outputs, self.output_combinations):
            if comb.evaluate(self.inputs) != output:
                return False
        for g, comb in zip(self.inputs, self.input_combinations):
            if comb is None or comb.evaluate(self.outputs) != g:
                return False
        return True

    def as_dict(self) -> Dict:
        return {
            "side": self.side,
            "inputs": [g.text() for g in self.inputs],
            "generators": [p.text() for p in self.outputs],
            "outputs_from_inputs": [comb.as_list() for comb in self.output_combinations],
            "inputs_from_outputs": [comb.as_list() if comb is not None else None
                                    for comb in self.input_combinations],
            "depth": self.depth,
            "verified": self.verified,
            "hypotheses": self.hypotheses,
        }


def _normalize_output(row: Row, side: str, monic: bool) -> Row:
    zero = row.element.instance.ring.zero()
    m = row.degree
    if m == 0:
        scale = row.vec[""].inverse()
    elif monic:
        first, second = _pair_from_vec(row.vec, m, side, zero)
        scale = (first if not first.is_zero() else second).inverse()
    else:
        return row
    return Row({w: c * scale for w, c in row.vec.items()}, _scale(row.element, scale, side),
               row.combination.scaled(scale))


def _certify(generators: GeneratorSet, rows: Sequence[Row], depth: int,
             hypotheses: Optional[Dict] = None) -> ReductionCertificate:
    instance, side = generators.instance, generators.side
    outputs = [row.element for row in rows]
    certificate = ReductionCertificate(instance, side, list(generators.elements), outputs,
                                       [row.combination for row in rows], depth=depth,
                                       hypotheses=hypotheses)
    output_set = GeneratorSet(instance, outputs, side)
    for g in generators.elements:
        if g.is_zero():
            certificate.input_combinations.append(Combination.zero(instance, side))
            continue
        result = reduce_mod(g, output_set)
        if not result.remainder.is_zero():
            log("debug", f"candidate generators {[p.text() for p in outputs]} do not reduce {g.text()}")
            certificate.input_combinations.append(None)
            return certificate
        certificate.input_combinations.append(result.combination)
    certificate.verified = certificate.verify()
    if not certificate.verified:
        log("error", "cofactors did not multiply out to the claimed elements")
    return certificate


#################### ONE-SIDED MINIMIZATION ####################
def _select_one_sided(span: Echelon, side: str) -> List[List[Row]]:
    """Candidate output lists, most economical first."""
    zero = span.zero
    n = span.min_degree()
    low = span.rows_of_degree(n)
    if n == 0:
        return [[low[0]]]
    if len(low) >= 2:
        r1, r2 = low[0], low[1]
        u, v = _pair_from_vec(r1.vec, n, side, zero)
        p = r1 if not u.is_zero() and not v.is_zero() else r1 + r2
        return [[p], [p, r2]]
    p = low[0]
    u, v = _pair_from_vec(p.vec, n, side, zero)
    if not u.is_zero() and not v.is_zero():
        return [[p]]
    missing = 0 if u.is_zero() else 1
    options: List[List[Row]] = []
    for row in span.sorted_rows():
        if row.degree <= n:
            continue
        pair = _pair_from_vec(row.vec, row.degree, side, zero)
        if not pair[missing].is_zero():
            options.append([p, row])
            break
    options.append([p])
    return options


def minimize_one_sided(generators: GeneratorSet, extra_depth: Optional[int] = None,
                       monic: bool = False) -> ReductionCertificate:
    """At most two generators for the same left (or right) ideal, with a verified certificate.

    Multiples of the inputs are collected depth by depth up to max degree + extra_depth
    (stopping early once a unit appears). The output is a minimal-degree element with both
    leading coordinates nonzero when one exists, joined when needed by the lowest element
    reaching the other coordinate. A failed certificate raises the depth once.
    """
    instance, side = generators.instance, generators.side
    if side == TWO_SIDED:
        raise ValueError("minimize_one_sided handles left and right ideals; use minimize_two_sided")
    _require_division_ring(instance)
    indexed = generators.indexed()
    if not indexed:
        raise EmptyGeneratorSetError("the generator set has no nonzero element")
    if len(indexed) == 1:
        i, g = indexed[0]
        row = Row(_coordinates(g, side), g, Combination.generator(instance, side, i))
        return _certify(generators, [row], depth=0)

    extra = DEFAULT_EXTRA_DEPTH if extra_depth is None else extra_depth
    limit = generators.max_degree + extra
    raised = False
    span = Echelon(instance, side)
    depth = 0
    while True:
        while depth <= limit:
            for i, g in indexed:
                base = Combination.generator(instance, side, i)
                for w in _words_of_length(depth):
                    word = instance.word(w)
                    if side == LEFT:
                        span.insert(word * g, base.left_mul(word))
                    else:
                        span.insert(g * word, base.right_mul(word))
            depth += 1
            if span.min_degree() == 0:
                break
        for rows in _select_one_sided(span, side):
            rows = [_normalize_output(row, side, monic) for row in rows]
            certificate = _certify(generators, rows, depth - 1)
            if certificate.verified:
                log("info", f"{side} ideal reduced to {len(rows)} generator(s) at depth {depth - 1}")
                return certificate
        if raised or span.min_degree() == 0:
            raise IncompleteReductionError(
                f"no certified generating set found up to depth {depth - 1}", depth - 1)
        raised = True
        limit += extra
        log("warn", f"certificate failed; raising the saturation depth to {limit}")


#################### TWO-SIDED MINIMIZATION ####################
@dataclass
class HypothesisReport:
    division_ring: bool
    tau_automorphisms: bool
    derivations: Dict[str, str]

    @property
    def verdict(self) -> str:
        if not self.division_ring or not self.tau_automorphisms or "inner" in self.derivations.values():
            return "fail"
        if "unverified" in self.derivations.values():
            return "unverified"
        return "pass"

    def as_dict(self) -> Dict:
        return {"division_ring": self.division_ring, "tau_automorphisms": self.tau_automorphisms,
                "derivations": dict(self.derivations), "verdict": self.verdict}


def check_two_sided_hypotheses(instance: AmalgamInstance) -> HypothesisReport:
    """Division ring, invertible twists, and neither delta_i inner.

    Innerness is decided only when tau_i = id over a commutative field, where the inner
    derivations are exactly the zero one.
    """
    ring = instance.ring
    derivations = {}
    for index in (1, 2):
        if ring.tau_is_identity(index):
            derivations[f"delta{index}"] = "inner" if ring.delta_is_zero(index) else "non-inner"
        else:
            derivations[f"delta{index}"] = "unverified"
    return HypothesisReport(ring.is_division_ring, ring.taus_invertible and ring.check_inverses(), derivations)


def _two_sided_products(instance: AmalgamInstance, row: Row):
    ring = instance.ring
    e, comb = row.element, row.combination
    for letter in ("x", "y"):
        z = instance.letter(letter)
        yield z * e, comb.left_mul(z)
        yield e * z, comb.right_mul(z)
    n = e.degree
    for name in ring.generator_names():
        r = ring.generator(name)
        right = instance.scalar(r)
        twisted = instance.scalar(ring.apply_endo(tau_alt(n), r))
        yield e * right, comb.right_mul(right)
        # f r - tau^(n)(r) f drops the degree
        yield e * right - twisted * e, comb.right_mul(right) - comb.left_mul(twisted)


def minimize_two_sided(generators: GeneratorSet, extra_depth: Optional[int] = None) -> ReductionCertificate:
    """A single generator for the two-sided ideal, with a verified certificate.

    Saturates under multiplication by the letters on both sides, right multiplication by
    the ring generators and the commutators f r - tau^(n)(r) f, keeping elements of degree
    at most max degree + extra_depth. The output is the minimal-degree survivor.
    """
    instance = generators.instance
    generators = GeneratorSet(instance, generators.elements, TWO_SIDED)
    _require_division_ring(instance)
    report = check_two_sided_hypotheses(instance)
    if report.verdict == "fail":
        log("warn", f"two-sided reduction refused on {instance.name}", detail=str(report.as_dict()))
        raise HypothesisError(f"the hypotheses of two-sided principality fail on {instance.name}",
                              report.as_dict())
    if report.verdict == "unverified":
        log("warn", f"non-innerness of the derivations of {instance.name} is unverified")
    indexed = generators.indexed()
    if not indexed:
        raise EmptyGeneratorSetError("the generator set has no nonzero element")

    extra = DEFAULT_EXTRA_DEPTH if extra_depth is None else extra_depth
    cap = generators.max_degree + extra
    span = Echelon(instance, TWO_SIDED)
    queue: Deque[Row] = deque()
    for i, g in indexed:
        row = span.insert(g, Combination.generator(instance, TWO_SIDED, i))
        if row is not None:
            queue.append(row)
    raised = False
    while True:
        while queue and span.min_degree() != 0:
            row = queue.popleft()
            for element, comb in _two_sided_products(instance, row):
                if element.is_zero() or element.degree > cap:
                    continue
                new = span.insert(element, comb)
                if new is not None:
                    queue.append(new)
        n = span.min_degree()
        best = _normalize_output(span.rows_of_degree(n)[0], TWO_SIDED, monic=False)
        certificate = _certify(generators, [best], depth=cap, hypotheses=report.as_dict())
        if certificate.verified:
            log("info", f"two-sided ideal generated by {best.element.text()}")
            return certificate
        if raised or n == 0:
            raise IncompleteReductionError(f"no certified single generator up to degree {cap}", cap)
        raised = True
        cap += extra
        queue.extend(span.rows.values())
        log("warn", f"certificate failed; raising the degree cap to {cap}")


def minimize(generators: GeneratorSet, extra_depth: Optional[int] = None,
             monic: bool = False) -> ReductionCertificate:
    if generators.side == TWO_SIDED:
        return minimize_two_sided(generators, extra_depth)
    return minimize_one_sided(generators, extra_depth, monic)
