from fractions import Fraction

import pytest

from core.daha import (DAHA_RELATIONS, DahaCalculator, daha_normal_form,
                       parse_relation, verify_isomorphism)
from core.errors import ExpressionError
from core.scalars import ParameterSet


@pytest.fixture(scope="module")
def calculator():
    return DahaCalculator()


def test_generic_verification(calculator):
    report = calculator.verify()
    assert report.passed
    assert len(report.records) == len(DAHA_RELATIONS) + 10 == 20
    assert all(calculator.images.unit_checks.values())
    assert calculator.images.units_verified


def test_normal_forms(calculator):
    assert calculator.normal_form("Y1*Y2").text() == "z3"
    assert calculator.normal_form("T*T^-1").text() == "1"
    assert calculator.normal_form("(T - h)*(T + h^-1)").is_zero()
    assert calculator.normal_form("Y1").text() == "(((1/2)*h - (1/2)*h^-1)*z3)*y + (z3)*x*y"
    assert calculator.normal_form("X1").text() == "z1"


def test_inverse_images(calculator):
    for name in ("T", "X1", "X2", "Y1", "Y2"):
        assert calculator.normal_form(f"{name}*{name}^-1").text() == "1"
        assert calculator.normal_form(f"{name}^-1*{name}").text() == "1"


def test_q_commutation(calculator):
    assert calculator.check_relation("Y1*Y2*X1", "q*X1*Y1*Y2").passed
    assert calculator.check_relation("T*X1*T", "X2").passed
    assert not calculator.check_relation("X1*Y1", "Y1*X1").passed


def test_failing_extra_relation(calculator):
    report = calculator.verify([("X1*X2", "X1")])
    assert not report.passed
    failing = [record for record in report.records if not record.passed]
    assert [record.relation for record in failing] == ["X1*X2 = X1"]
    assert report.as_dict()["passed"] is False


RATIONAL_POINTS = [(2, 3), (-3, 2), (Fraction(1, 2), Fraction(5, 3)), (3, Fraction(-1, 2)), (5, 4)]
MOD_7_POINTS = [(2, 3), (3, 5), (6, 2), (4, 6), (5, 4)]


@pytest.mark.parametrize("q, h", RATIONAL_POINTS)
def test_rational_specializations(q, h):
    assert verify_isomorphism(ParameterSet.specialized(q, h)).passed


@pytest.mark.parametrize("q, h", MOD_7_POINTS)
def test_mod_7_specializations(q, h):
    report = verify_isomorphism(ParameterSet.specialized(q, h, 7))
    assert report.passed


def test_mod_11_specialization():
    assert verify_isomorphism(ParameterSet.specialized(5, 4, 11)).passed


def test_specialized_normal_form():
    # x^2 = beta^2 = (1/4)(h + h^-1)^2, 25/9 at h = 3
    assert daha_normal_form("(T - (1/2)*h + (1/2)*h^-1)^2", ParameterSet.specialized(2, 3)).text() == "(25/9)"


def test_parse_relation():
    assert parse_relation("T*X1*T = X2") == ("T*X1*T", "X2")
    assert parse_relation("X1*X2 - X2*X1") == ("X1*X2 - X2*X1", "0")
    with pytest.raises(ExpressionError):
        parse_relation("a = b = c")
