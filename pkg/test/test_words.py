import pytest

from core.amalgam import word_to_amalgam
from core.errors import ContextMismatchError
from core.fields import field_preset
from core.ore import SkewPoly
from core.rings import EndoName
from core.words import (WordElement, embed_first, embed_second, leading,
                        leading_twist, word_key, word_mul,
                        word_order_cmp)


@pytest.fixture
def ring():
    return field_preset("F1")


def test_word_order():
    assert sorted(["y", "xy", "", "x", "yx"], key=word_key) == ["", "x", "y", "xy", "yx"]
    assert word_order_cmp("x", "yx") == -1
    assert word_order_cmp("xy", "xy") == 0
    assert word_order_cmp("xy", "yx") == -1
    assert word_order_cmp("yxy", "x") == 1


def test_no_square_reduction(ring):
    x = WordElement.word(ring, "x")
    assert (x * x).terms == {"xx": ring.one()}
    assert (x * x).text() == "x*x"


def test_push_through_letters(ring):
    s = ring.generator("s")
    x = WordElement.word(ring, "x")
    y = WordElement.word(ring, "y")
    assert word_mul(x * y, WordElement.constant(ring, s)) == WordElement.word(ring, "xy", s)
    assert word_mul(x, WordElement.constant(ring, s)) == WordElement.word(ring, "x", -s)


def test_leading_term_law(ring):
    s = ring.generator("s")
    f = WordElement(ring, {"xy": s, "y": ring.one()})
    g = WordElement(ring, {"x": s + 1, "": s})
    coeff, word = leading(f * g)
    assert word == "xyx"
    assert coeff == s * ring.apply_endo(leading_twist("xy"), s + 1)
    assert leading_twist("xy") == EndoName.from_word("xy")
    with pytest.raises(ValueError):
        leading(WordElement(ring, {}))


def test_embeddings(ring):
    s = ring.generator("s")
    poly = SkewPoly(ring, 1, [s, 0, 1])
    assert embed_first(poly) == WordElement(ring, {"": s, "xx": ring.one()})
    assert embed_second(SkewPoly.variable(ring, 2)) == WordElement.word(ring, "y")
    with pytest.raises(ContextMismatchError):
        embed_second(poly)


def test_quotient_map(f1):
    ring = f1.ring
    s = ring.generator("s")
    f = WordElement(ring, {"xx": ring.one(), "xyyx": s})
    # xx = s^2 and xyyx = x(s^2+1)x = (s^2+1)s^2
    assert word_to_amalgam(f1, f) == f1.scalar(s * s + s * (s * s + 1) * s * s)
