import random
from fractions import Fraction

import pytest

from core import user_config
from core.contexts import (COMPAT_TARGETS, RunConfig, build_context,
                           canonical_context, compat_targets, parse,
                           parse_params, print_canonical)
from core.errors import (ExpressionError, SpecializationError,
                         UnknownContextError)
from core.expression import BinOp, Sym
from core.sampling import random_amalgam, random_torus
from core.scalars import ParameterSet
from core.torus import QuantumTorus


def test_parse_params():
    assert parse_params("generic").is_generic
    point = parse_params("q=2,h=3")
    assert point.q == 2 and point.h == 3
    assert parse_params("q=1/2, t=4").h == 2
    assert parse_params("q=2,h=3", prime=7).flavor.characteristic == 7
    with pytest.raises(ExpressionError):
        parse_params("q=2,t=2")
    with pytest.raises(ExpressionError):
        parse_params("q=2")
    with pytest.raises(ExpressionError):
        parse_params("q=x")
    with pytest.raises(SpecializationError):
        parse_params("q=0,h=1")


def test_context_names():
    assert canonical_context("F1") == "QS-order2"
    assert canonical_context("F2") == "F2S-dds"
    assert canonical_context("torus3") == "torus3"
    with pytest.raises(UnknownContextError):
        canonical_context("F3")
    with pytest.raises(UnknownContextError):
        RunConfig(context="nowhere")


def test_run_config_defaults():
    config = RunConfig.from_settings()
    assert config.context == "daha"
    assert config.output_format == "text"
    assert config.seed == 20240917
    assert config.extra_depth == 4
    assert not config.strict_schema
    user_config.set_seed(31)
    assert RunConfig.from_settings().seed == 31
    assert RunConfig.from_settings(seed=5).seed == 5


def test_run_config_environment(monkeypatch):
    monkeypatch.setenv("SKEWALG_SEED", "7")
    monkeypatch.setenv("SKEWALG_STRICT_SCHEMA", "1")
    config = RunConfig.from_settings(output_format="json")
    assert config.seed == 7
    assert config.strict_schema
    assert config.output_format == "json"
    with pytest.raises(ValueError):
        RunConfig(output_format="xml")


def test_torus_context():
    ctx = build_context(RunConfig(context="torus3"))
    assert print_canonical(ctx.evaluate("z3*z1")) == "q*z1*z3"
    assert print_canonical(ctx.evaluate("z1^-1*z1")) == "1"
    assert print_canonical(ctx.evaluate("(z1)^-1*z1")) == "1"
    assert print_canonical(ctx.evaluate("t*h^-2")) == "1"


def test_field_contexts():
    f1 = build_context(RunConfig(context="F1"))
    assert print_canonical(f1.evaluate("x*x")) == "s^2"
    assert print_canonical(f1.evaluate("x^-1")) == "((1)/(s^2))*x"
    assert print_canonical(f1.evaluate("x*s + s*x")) == "0"
    f2 = build_context(RunConfig(context="F2"))
    assert print_canonical(f2.evaluate("x*s - s*x")) == "1"
    with pytest.raises(ExpressionError):
        f2.evaluate("z1")


def test_daha_context():
    ctx = build_context(RunConfig(context="daha"))
    assert print_canonical(ctx.evaluate("Y1*Y2")) == "z3"
    assert ctx.calculator is not None
    with pytest.raises(ExpressionError):
        ctx.evaluate("x^-1")


def test_parse_against_context():
    assert parse("x*y", RunConfig(context="F1")) == BinOp("*", Sym("x"), Sym("y"))
    with pytest.raises(ExpressionError):
        parse("xy", RunConfig(context="F1"))


def test_compat_targets():
    assert set(compat_targets("daha")) == {"x", "y"}
    assert set(compat_targets("torus-bad")) == {"y"}
    assert set(compat_targets("F1")) == {"x", "y"}
    assert "torus-bad" in COMPAT_TARGETS
    with pytest.raises(UnknownContextError):
        compat_targets("nowhere")


def test_specialized_torus_context():
    ctx = build_context(RunConfig(context="torus3", params=parse_params("q=3,h=2")))
    assert print_canonical(ctx.evaluate("z3*z1")) == "3*z1*z3"
    assert ctx.evaluate("q").scalar_part() == Fraction(3)


@pytest.mark.parametrize("context", ["torus3", "daha", "F1"])
def test_printed_elements_parse_back(context):
    ctx = build_context(RunConfig(context=context))
    rng = random.Random(20240917)
    for _ in range(50):
        if ctx.instance is None:
            element = random_torus(rng, QuantumTorus(ParameterSet.generic()), max_terms=3, exp_range=2)
        else:
            element = random_amalgam(rng, ctx.instance, rng.randint(0, 2))
        text = print_canonical(element)
        assert print_canonical(ctx.evaluate(text)) == text
