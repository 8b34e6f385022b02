import random

import pytest

from core.amalgam import (alt_word, degree_leading, factor_word, hat_word,
                          is_alternating, to_left_form, to_right_form,
                          word_factor)
from core.errors import ContextMismatchError, NotInvertibleError
from core.sampling import random_amalgam


def letters(instance):
    return instance.letter("x"), instance.letter("y")


def test_word_helpers():
    assert alt_word("x", 3) == "xyx"
    assert alt_word("y", 2) == "yx"
    assert hat_word("x", 2) == "yx"
    assert hat_word("y", 3) == "yxy"
    assert factor_word("x", 1, 3) == "yx"
    assert factor_word("xhat", 1, 3) == "xy"
    assert alt_word("x", 1) + factor_word("x", 1, 3) == alt_word("x", 3)
    assert factor_word("xhat", 1, 3) + hat_word("x", 1) == hat_word("x", 3)
    assert is_alternating("xyx") and not is_alternating("xxy")
    with pytest.raises(ValueError):
        factor_word("x", 3, 1)


def test_square_relations(f1, daha):
    x, y = letters(f1)
    s = f1.ring.generator("s")
    assert x * x == f1.scalar(s * s)
    assert y * y == f1.scalar(s * s + 1)
    dx, dy = letters(daha)
    beta = daha.ring.params.beta
    assert dx * dx == daha.scalar(beta * beta)
    assert dy * dy == daha.scalar(daha.ring.generator("z3").inverse())


def test_letters_twist_scalars(f1, f2):
    x, _ = letters(f1)
    s = f1.scalar(f1.ring.generator("s"))
    assert x * s == -(s * x)
    x2, _ = letters(f2)
    s2 = f2.scalar(f2.ring.generator("s"))
    assert x2 * s2 - s2 * x2 == f2.one()


def test_text_forms(f1):
    x, y = letters(f1)
    s = f1.scalar(f1.ring.generator("s"))
    assert (x * y).text() == "x*y"
    assert (s * x * y).text() == "(s)*x*y"
    assert (x * y + y).text() == "y + x*y"
    assert f1.zero().text() == "0"
    assert f1.one().text() == "1"


def test_degree_and_pairs(f1):
    x, y = letters(f1)
    s = f1.ring.generator("s")
    f = f1.scalar(s) * x * y + y * x + f1.scalar(s + 1) * y
    assert f.degree == 2
    assert f.pair(2) == (s, f1.ring.one())
    assert f.pair(1) == (f1.ring.zero(), s + 1)
    assert f.hat_pair(2) == (f1.ring.one(), s)
    assert degree_leading(f).pair == f.pair(2)
    assert degree_leading(f1.zero()).is_zero


def test_associativity(f1, f2, daha):
    for instance in (f1, f2, daha):
        x, y = letters(instance)
        r = instance.scalar(instance.ring.generator(instance.ring.generator_names()[0]))
        f, g, h = x * y + r, y * r * x - x, r * y + instance.one()
        assert (f * g) * h == f * (g * h)


def test_left_right_round_trip(f1, f2, daha):
    for instance in (f1, f2, daha):
        x, y = letters(instance)
        r = instance.scalar(instance.ring.generator(instance.ring.generator_names()[0]))
        f = r * x * y + (r + instance.one()) * y * x * y - x
        right = to_right_form(f)
        assert right.degree == f.degree
        assert to_left_form(right) == f


def test_letter_inverse(f1, daha):
    x, y = letters(f1)
    s = f1.ring.generator("s")
    assert x.inverse() == f1.scalar(1 / (s * s)) * x
    assert x.inverse() * x == f1.one()
    assert y ** -1 * y == f1.one()
    with pytest.raises(NotInvertibleError):
        (x + y).inverse()
    dx, _ = letters(daha)
    with pytest.raises(NotInvertibleError):
        dx.inverse()


def test_word_factor_multiples(f1):
    w = word_factor(f1, "x", 1, 3)
    assert f1.letter("x") * w == f1.x_alt(3)
    assert word_factor(f1, "yhat", 1, 3) * f1.y_hat(1) == f1.y_hat(3)


@pytest.mark.parametrize("name", ["f1", "daha"])
def test_word_factor_identities(name, request):
    instance = request.getfixturevalue(name)
    for m in range(9):
        for n in range(m + 1):
            assert instance.x_alt(n) * word_factor(instance, "x", n, m) == instance.x_alt(m)
            assert instance.y_alt(n) * word_factor(instance, "y", n, m) == instance.y_alt(m)
            assert word_factor(instance, "xhat", n, m) * instance.x_hat(n) == instance.x_hat(m)
            assert word_factor(instance, "yhat", n, m) * instance.y_hat(n) == instance.y_hat(m)


@pytest.mark.parametrize("name", ["f1", "f2", "daha"])
def test_degree_is_subadditive(name, request):
    instance = request.getfixturevalue(name)
    rng = random.Random(name)
    for _ in range(25):
        f = random_amalgam(rng, instance, rng.randint(0, 3))
        g = random_amalgam(rng, instance, rng.randint(0, 3))
        assert (f * g).degree <= f.degree + g.degree


def test_instances_do_not_mix(f1, f2):
    with pytest.raises(ContextMismatchError):
        f1.one() + f2.one()
