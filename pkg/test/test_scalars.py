from fractions import Fraction

import pytest

from core.errors import (CharacteristicError, FlavorMismatchError,
                         ScalarDivisionError, SpecializationError)
from core.scalars import (DDS_DERIVATION, LAURENT_FLAVOR, RATIONAL_FLAVOR,
                          DerivationSpec, FieldAutomorphismSpec, ParameterSet,
                          derive, prime_flavor, ratfunc_flavor, specialize)


def test_rational_text_and_inverse():
    value = RATIONAL_FLAVOR.from_fraction(Fraction(-3, 2))
    assert value.text() == "-(3/2)"
    assert value.inverse() == Fraction(-2, 3)
    assert RATIONAL_FLAVOR.from_int(3).text() == "3"
    with pytest.raises(ScalarDivisionError):
        RATIONAL_FLAVOR.zero().inverse()


def test_prime_field_arithmetic():
    f7 = prime_flavor(7)
    three = f7.from_int(3)
    assert three.inverse() == 5
    assert f7.from_fraction(Fraction(1, 2)) == 4
    assert (three * 5).is_one()
    with pytest.raises(ValueError):
        prime_flavor(4)
    with pytest.raises(ScalarDivisionError):
        prime_flavor(2).from_fraction(Fraction(1, 2))


def test_flavors_do_not_mix():
    with pytest.raises(FlavorMismatchError):
        RATIONAL_FLAVOR.one() + prime_flavor(5).one()


def test_laurent_text_and_units():
    q, h = LAURENT_FLAVOR.generator("q"), LAURENT_FLAVOR.generator("h")
    assert (q * h - h.inverse()).text() == "q*h - h^-1"
    assert (h * Fraction(1, 2)).text() == "(1/2)*h"
    assert (q * h).is_unit()
    assert (q * h).inverse() * q * h == 1
    assert not (q + h).is_unit()
    with pytest.raises(ScalarDivisionError):
        (q + h).inverse()


def test_ratfunc_reduced_text():
    flavor = ratfunc_flavor(0)
    s = flavor.generator("s")
    assert ((s * s + 1) / s ** 3).text() == "(s^2+1)/(s^3)"
    assert (1 / s).text() == "(1)/(s)"
    assert ((s * s - 1) / (s - 1)) == s + 1
    assert (s * s + 1).text() == "s^2+1"


def test_ratfunc_over_f2():
    flavor = ratfunc_flavor(2)
    s = flavor.generator("s")
    assert (s + 1) * (s + 1) == s * s + 1
    assert (s + s).is_zero()


def test_dds_derivation():
    s = ratfunc_flavor(0).generator("s")
    dds = DerivationSpec("d/ds", DDS_DERIVATION)
    assert derive(dds, s ** 3) == 3 * s * s
    assert derive(dds, 1 / s) == -1 / (s * s)
    assert dds.check_leibniz([(s * s + 1, 1 / s), (s ** 3, s - 2)])


def test_order_two_automorphism():
    s = ratfunc_flavor(0).generator("s")
    sigma = FieldAutomorphismSpec("sigma", -s, -s)
    assert sigma.apply(s * s + s) == s * s - s
    assert sigma.power(2).is_identity
    assert not sigma.is_identity
    with pytest.raises(ValueError):
        FieldAutomorphismSpec("broken", s * s, s)


def test_parameter_constants():
    generic = ParameterSet.generic()
    assert generic.beta * generic.beta - generic.alpha * generic.alpha == 1
    point = ParameterSet.specialized(2, 3)
    assert point.alpha == Fraction(4, 3)
    assert point.beta == Fraction(5, 3)
    assert point.t == 9
    assert point.describe() == "q=2, h=3 over Q"


def test_specialization_failures():
    with pytest.raises(SpecializationError):
        ParameterSet.specialized(0, 1)
    with pytest.raises(CharacteristicError):
        ParameterSet.specialized(1, 1, p=2).alpha
    h = LAURENT_FLAVOR.generator("h")
    zero, one = RATIONAL_FLAVOR.zero(), RATIONAL_FLAVOR.one()
    with pytest.raises(SpecializationError):
        specialize(h.inverse(), {"q": one, "h": zero})
    with pytest.raises(SpecializationError):
        specialize(h, {"q": one})


def test_specialize_laurent():
    q, h = LAURENT_FLAVOR.generator("q"), LAURENT_FLAVOR.generator("h")
    values = {"q": RATIONAL_FLAVOR.from_int(2), "h": RATIONAL_FLAVOR.from_int(4)}
    assert specialize(q * h.inverse(), values) == Fraction(1, 2)
    assert ParameterSet.specialized(2, 4).specialize(q * q + h) == 8
