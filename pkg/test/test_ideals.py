import random

import pytest

from core.errors import EmptyGeneratorSetError, HypothesisError
from core.ideals import (DEFAULT_EXTRA_DEPTH, LEFT, RIGHT, TWO_SIDED, Combination, GeneratorSet,
                         alternating_words, check_two_sided_hypotheses,
                         is_member, is_member_two_sided, membership_witness,
                         minimize, minimize_one_sided, minimize_two_sided,
                         normalize_side, reduce_mod, solve_linear)
from core.sampling import random_amalgam, random_generator_list


def basics(instance):
    s = instance.scalar(instance.ring.generator("s"))
    return s, instance.letter("x"), instance.letter("y")


def test_sides_and_words():
    assert normalize_side("L") == LEFT
    assert normalize_side("r") == RIGHT
    assert normalize_side("2") == TWO_SIDED
    with pytest.raises(ValueError):
        normalize_side("up")
    assert alternating_words(2) == ["", "x", "y", "xy", "yx"]


def test_solve_linear(f1):
    ring = f1.ring
    one, zero = ring.one(), ring.zero()
    assert solve_linear([(one, zero), (one, one)], (one * 2, one * 3), zero) == [-one, one * 3]
    assert solve_linear([(one, zero)], (zero, one), zero) is None
    assert solve_linear([], (one, zero), zero) is None


def test_combination_merges_and_evaluates(f1):
    s, x, y = basics(f1)
    one = f1.one()
    comb = Combination(f1, LEFT, [(x, 0, one), (y, 0, one), (s, 1, one)])
    assert len(comb.triples()) == 2
    g = [x * y, s + x]
    assert comb.evaluate(g) == (x + y) * x * y + s * (s + x)
    assert (comb - comb).is_zero()
    rows = comb.as_list()
    assert {row["generator"] for row in rows} == {0, 1}


def test_left_unit_ideal(f1):
    _, x, y = basics(f1)
    certificate = minimize(GeneratorSet(f1, [x, y], "L"))
    assert certificate.verified and certificate.verify()
    assert [p.text() for p in certificate.outputs] == ["1"]
    assert certificate.output_combinations[0].evaluate([x, y]) == f1.one()


def test_right_unit_ideal(f1):
    _, x, y = basics(f1)
    certificate = minimize(GeneratorSet(f1, [x, y], "R"))
    assert certificate.verified
    assert certificate.outputs == [f1.one()]


def test_single_generator_is_kept(f1):
    s, x, y = basics(f1)
    g = x * y + s
    certificate = minimize_one_sided(GeneratorSet(f1, [g], LEFT))
    assert certificate.verified
    assert certificate.outputs == [g]


def test_redundant_generators_collapse(f1):
    s, x, y = basics(f1)
    p = x + y
    gens = GeneratorSet(f1, [x * p, (y + s) * p], LEFT)
    certificate = minimize_one_sided(gens)
    assert certificate.verified
    assert len(certificate.outputs) == 1
    assert certificate.outputs[0].degree <= 1
    assert is_member(p, GeneratorSet(f1, certificate.outputs, LEFT), 3)


def test_proper_left_ideal(f2_zero):
    s, x, y = basics(f2_zero)
    p = x + s
    assert (p * p).is_zero()
    certificate = minimize_one_sided(GeneratorSet(f2_zero, [p, y * p], LEFT), monic=True)
    assert certificate.verified
    assert [q.degree for q in certificate.outputs] == [1]
    assert certificate.outputs[0].coeff("x") == f2_zero.ring.one()
    assert not is_member(f2_zero.one(), GeneratorSet(f2_zero, [p], LEFT), 4)


def test_reduce_mod_plain_and_complete(f1):
    s, x, _ = basics(f1)
    gens = GeneratorSet(f1, [x], LEFT)
    remainder, _ = reduce_mod(s * s, gens)
    assert remainder == s * s
    result = reduce_mod(s * s, gens, complete=True)
    assert result.remainder.is_zero() and result.completed
    assert result.combination.evaluate([x]) == s * s
    result = reduce_mod(f1.one(), gens, complete=True)
    assert result.remainder.is_zero()
    assert result.combination.evaluate([x]) == f1.one()


def test_reduce_mod_top_steps(f1):
    s, x, y = basics(f1)
    gens = GeneratorSet(f1, [x * y + s], LEFT)
    f = y * x * y + x * y + s
    result = reduce_mod(f, gens)
    assert result.steps >= 1
    assert result.remainder.degree < f.degree
    assert result.combination.evaluate(gens.elements) + result.remainder == f


def test_membership(f1):
    s, x, y = basics(f1)
    gens = GeneratorSet(f1, [x], LEFT)
    assert is_member(s * s, gens, 2)
    # x is a unit, so the left ideal it generates is everything
    assert is_member(f1.one(), gens, 2)
    witness = membership_witness(y * x, gens, 2)
    assert witness.evaluate([x]) == y * x
    assert is_member_two_sided(f1.one(), gens, 1)
    with pytest.raises(ValueError):
        is_member(s, gens, -1)


def test_hypotheses(f1, f2, f2_zero):
    assert check_two_sided_hypotheses(f2).verdict == "pass"
    assert check_two_sided_hypotheses(f2_zero).verdict == "fail"
    assert check_two_sided_hypotheses(f1).verdict == "unverified"
    assert check_two_sided_hypotheses(f2).as_dict()["derivations"] == {"delta1": "non-inner", "delta2": "non-inner"}


def test_two_sided_principal(f2):
    s, x, y = basics(f2)
    for gens in ([x], [f2.one()], [x * y + s, y * s]):
        certificate = minimize_two_sided(GeneratorSet(f2, gens, TWO_SIDED))
        assert certificate.verified
        assert certificate.outputs == [f2.one()]
        assert certificate.hypotheses["verdict"] == "pass"


def test_two_sided_unverified_hypotheses(f1):
    _, x, _ = basics(f1)
    certificate = minimize(GeneratorSet(f1, [x], "2"))
    assert certificate.verified
    assert certificate.outputs == [f1.one()]
    assert certificate.hypotheses["verdict"] == "unverified"


def test_two_sided_refused(f2_zero):
    _, x, _ = basics(f2_zero)
    with pytest.raises(HypothesisError) as err:
        minimize_two_sided(GeneratorSet(f2_zero, [x], TWO_SIDED))
    assert err.value.report["verdict"] == "fail"


def test_non_division_ring_refused(daha):
    x = daha.letter("x")
    with pytest.raises(HypothesisError):
        minimize(GeneratorSet(daha, [x], LEFT))
    with pytest.raises(HypothesisError):
        reduce_mod(x, GeneratorSet(daha, [x], LEFT))


def test_empty_generator_set(f1):
    with pytest.raises(EmptyGeneratorSetError):
        minimize(GeneratorSet(f1, [f1.zero()], LEFT))
    with pytest.raises(EmptyGeneratorSetError):
        minimize(GeneratorSet(f1, [], TWO_SIDED))


def test_certificate_document(f1):
    _, x, y = basics(f1)
    certificate = minimize(GeneratorSet(f1, [x, f1.zero(), y], LEFT))
    document = certificate.as_dict()
    assert document["side"] == LEFT
    assert document["generators"] == ["1"]
    assert document["inputs"] == [x.text(), "0", y.text()]
    assert len(document["inputs_from_outputs"]) == 3
    assert document["verified"] is True
    certificate.outputs = [x]
    assert not certificate.verify()


@pytest.mark.parametrize("seed", range(12))
def test_complete_reduction_agrees_with_membership(f1, seed):
    rng = random.Random(seed)
    gens = random_generator_list(rng, f1, max_count=2, max_degree=2)
    f = random_amalgam(rng, f1, rng.randint(0, 2))
    if seed % 2:
        f = f * gens[0]
    generators = GeneratorSet(f1, gens, LEFT)
    result = reduce_mod(f, generators, complete=True)
    assert result.remainder.is_zero() == is_member(f, generators, f.degree + DEFAULT_EXTRA_DEPTH)
    assert result.combination.evaluate(gens) + result.remainder == f
    if seed % 2:
        assert result.remainder.is_zero()


def test_plain_reduce_mod_only_top_reduces(f1):
    s, x, _ = basics(f1)
    gens = GeneratorSet(f1, [x], LEFT)
    # s^2 is in the ideal, but no left multiple of x has degree 0
    assert reduce_mod(s * s, gens).remainder == s * s
    assert is_member(s * s, gens, DEFAULT_EXTRA_DEPTH)
    assert "Top-reduce" in reduce_mod.__doc__


@pytest.mark.parametrize("seed", range(6))
def test_minimize_is_idempotent(f1, f2, seed):
    rng = random.Random(seed)
    for instance, side in ((f1, LEFT), (f2, TWO_SIDED)):
        gens = GeneratorSet(instance, random_generator_list(rng, instance, max_count=3, max_degree=2), side)
        first = minimize(gens)
        again = minimize(GeneratorSet(instance, first.outputs, side))
        assert again.verified
        assert len(again.outputs) <= len(first.outputs)
        if side == LEFT and len(first.outputs) == 1:
            assert again.outputs == first.outputs
