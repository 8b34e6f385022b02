import pytest

from core.contexts import compat_targets
from core.errors import CompatibilityError, ContextMismatchError
from core.fields import field_preset, field_quadratics
from core.ore import (QuadraticData, SkewPoly, quadratic_compat_check,
                      quotient_reduce, require_compatible)


def setup_field(name):
    ring = field_preset(name)
    s = ring.generator("s")
    x = SkewPoly.variable(ring, 1)
    return ring, s, x


def test_order_two_commutation():
    ring, s, x = setup_field("F1")
    assert x * SkewPoly.constant(ring, 1, s) == SkewPoly(ring, 1, [0, -s])
    assert x.text() == "(1)*x"


def test_dds_commutation():
    ring, s, x = setup_field("F2")
    assert x * SkewPoly.constant(ring, 1, s) == SkewPoly(ring, 1, [1, s])


def test_multiplication_is_associative():
    ring, s, x = setup_field("F2")
    f = SkewPoly(ring, 1, [s, 1, s * s])
    g = SkewPoly(ring, 1, [1 / s, s + 1])
    h = SkewPoly(ring, 1, [s ** 3, 0, 1])
    assert (f * g) * h == f * (g * h)


def test_quotient_reduce():
    ring, s, x = setup_field("F1")
    first, _ = field_quadratics(ring)
    assert quotient_reduce(x * x, first) == SkewPoly.constant(ring, 1, s * s)
    assert quotient_reduce(x * x * x, first) == SkewPoly(ring, 1, [0, s * s])
    assert quotient_reduce(x, first) == x


def test_quotient_reduce_rejects_other_index():
    ring, _, _ = setup_field("F1")
    _, second = field_quadratics(ring)
    with pytest.raises(ContextMismatchError):
        quotient_reduce(SkewPoly.variable(ring, 1), second)


@pytest.mark.parametrize("name", ["daha", "QS-order2", "F2S-dds", "F2S-zero"])
def test_shipped_quadratics_are_normal(name):
    for qd in compat_targets(name).values():
        report = quadratic_compat_check(qd)
        assert report.passed
        assert report.first_failure is None


def test_field_relator_text():
    ring, _, _ = setup_field("F1")
    first, _ = field_quadratics(ring)
    assert quadratic_compat_check(first).relator == "(1)*x^2 + (-s^2)"


def test_crafted_failure_is_reported():
    qd = compat_targets("torus-bad")["y"]
    report = quadratic_compat_check(qd)
    assert not report.passed
    failure = report.first_failure
    assert failure.identity == "N*z1 = tau2^2(z1)*N"
    assert failure.lhs != failure.rhs
    assert report.as_dict()["first_failure"]["passed"] is False
    with pytest.raises(CompatibilityError) as err:
        require_compatible(qd)
    assert err.value.report.relator == report.relator


def test_quadratic_data_relator():
    ring, s, _ = setup_field("F1")
    qd = QuadraticData(ring, 1, s, s * s)
    assert qd.relator() == SkewPoly(ring, 1, [-(s * s), -s, 1])
