import pytest

from core.errors import ExpressionError
from core.expression import (BinOp, Group, Num, Pow, Sym, expr_text,
                             parse_expression, substitute, tokenize)


def test_precedence():
    expr = parse_expression("a + b*c^2")
    assert expr == BinOp("+", Sym("a"), BinOp("*", Sym("b"), Pow(Sym("c"), 2)))
    assert expr_text(expr) == "a + b*c^2"


def test_t_means_h_squared():
    assert parse_expression("t", symbols={"h", "q"}) == Pow(Sym("h"), 2)
    assert parse_expression("t^-1", symbols={"h"}, invertible={"h"}) == Pow(Sym("h"), -2)
    assert parse_expression("t", symbols={"t"}) == Sym("t")


def test_implicit_multiplication_is_rejected():
    with pytest.raises(ExpressionError, match="implicit"):
        parse_expression("x y")
    with pytest.raises(ExpressionError, match="implicit"):
        parse_expression("2(x + 1)")
    with pytest.raises(ExpressionError, match="unknown symbol"):
        parse_expression("z1z3", symbols={"z1", "z3"})


def test_negative_exponents():
    assert parse_expression("z1^-2", invertible={"z1"}) == Pow(Sym("z1"), -2)
    assert parse_expression("2^-1") == Pow(Num(2), -1)
    assert parse_expression("(z1)^-1", invertible={"z1"}) == Pow(Sym("z1"), -1)
    assert parse_expression("((z1^2))^-1", invertible={"z1"}) == Pow(Sym("z1"), -2)
    assert parse_expression("(3)^-1") == Pow(Num(3), -1)
    with pytest.raises(ExpressionError):
        parse_expression("(x + 1)^-1")
    with pytest.raises(ExpressionError, match="not invertible"):
        parse_expression("x^-1", symbols={"x"}, invertible=set())
    with pytest.raises(ExpressionError, match="not invertible"):
        parse_expression("(x)^-1", symbols={"x"}, invertible=set())
    with pytest.raises(ExpressionError):
        parse_expression("0^-1")


def test_powers_of_t_multiply():
    assert parse_expression("t^3", symbols={"h"}) == Pow(Sym("h"), 6)
    with pytest.raises(ExpressionError):
        parse_expression("z1^2^3")


def test_malformed_input():
    for text in ("", "x +", "(x", "x ^ y", "x $ y", "x)"):
        with pytest.raises(ExpressionError):
            parse_expression(text)


def test_error_positions():
    with pytest.raises(ExpressionError) as err:
        parse_expression("x + w", symbols={"x"})
    assert err.value.position == 4


def test_tokenizer():
    kinds = [token.kind for token in tokenize("z1*(2 - q)")]
    assert kinds == ["name", "op", "op", "int", "op", "name", "op", "end"]


def test_substitute_wraps_groups():
    expr = substitute(parse_expression("y^2*x"), {"y": parse_expression("a + b")})
    assert expr == BinOp("*", Pow(Group(BinOp("+", Sym("a"), Sym("b"))), 2), Sym("x"))
    assert expr_text(expr) == "(a + b)^2*x"
