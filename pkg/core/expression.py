"""
Expression language shared by every context.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ['^' ['-'] INT]
    atom   := INT | SYMBOL | '(' expr ')'

Multiplication is never implicit. A negative exponent needs an invertible symbol or a
nonzero integer as its base; the right operand of '/' must evaluate to a unit.
``t`` is read as ``h^2``.
"""
import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Union

from core.errors import ExpressionError, SkewAlgError


#################### SYNTAX TREE ####################
@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Group:
    inner: "Expr"


Expr = Union[Num, Sym, Neg, BinOp, Pow, Group]


#################### TOKENIZER ####################
_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            raise ExpressionError(f"unexpected character '{text[pos:].lstrip()[0]}'", pos)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


#################### PARSER ####################
class Parser:

    def __init__(self, text: str, symbols: Optional[Iterable[str]] = None,
                 invertible: Optional[Iterable[str]] = None):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.symbols = set(symbols) if symbols is not None else None
        self.invertible = set(invertible) if invertible is not None else None

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _accept(self, value: str) -> bool:
        if self.current.kind == "op" and self.current.value == value:
            self.index += 1
            return True
        return False

    def parse(self) -> Expr:
        if self.current.kind == "end":
            raise ExpressionError("empty expression", 0)
        expr = self.expr()
        if self.current.kind != "end":
            token = self.current
            if token.kind in ("name", "int") or token.value == "(":
                raise ExpressionError("implicit multiplication is not allowed; use '*'", token.position)
            raise ExpressionError(f"unexpected '{token.value}'", token.position)
        return expr

    def expr(self) -> Expr:
        node = self.term()
        while self.current.kind == "op" and self.current.value in "+-":
            op = self._advance().value
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.current.kind == "op" and self.current.value in "*/":
            op = self._advance().value
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self._accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        start = self.current.position
        base = self.atom()
        if not self._accept("^"):
            return base
        negative = self._accept("-")
        token = self.current
        if token.kind != "int":
            raise ExpressionError("exponent must be an integer literal", token.position)
        self._advance()
        exponent = -int(token.value) if negative else int(token.value)
        if exponent < 0:
            while isinstance(base, Group):
                base = base.inner
            self._check_invertible(base, start)
        if isinstance(base, Pow):
            return Pow(base.base, base.exponent * exponent)
        return Pow(base, exponent)

    def _check_invertible(self, base: Expr, position: int):
        if isinstance(base, Num):
            if base.value == 0:
                raise ExpressionError("cannot invert 0", position)
            return
        if isinstance(base, Pow) and isinstance(base.base, Sym):
            base = base.base
        if isinstance(base, Sym):
            if self.invertible is not None and base.name not in self.invertible:
                raise ExpressionError(f"'{base.name}' is not invertible in this context", position)
            return
        raise ExpressionError("only symbols and integers can carry negative exponents", position)

    def atom(self) -> Expr:
        token = self.current
        if token.kind == "int":
            self._advance()
            return Num(int(token.value))
        if token.kind == "name":
            self._advance()
            return self._symbol(token)
        if self._accept("("):
            inner = self.expr()
            if not self._accept(")"):
                raise ExpressionError("missing ')'", self.current.position)
            return Group(inner)
        if token.kind == "end":
            raise ExpressionError("unexpected end of expression", token.position)
        raise ExpressionError(f"unexpected '{token.value}'", token.position)

    def _symbol(self, token: Token) -> Expr:
        name = token.value
        if name == "t" and (self.symbols is None or "h" in self.symbols) and \
                (self.symbols is None or "t" not in self.symbols):
            return Pow(Sym("h"), 2)
        if self.symbols is not None and name not in self.symbols:
            raise ExpressionError(f"unknown symbol '{name}'", token.position)
        return Sym(name)


def parse_expression(text: str, symbols: Optional[Iterable[str]] = None,
                     invertible: Optional[Iterable[str]] = None) -> Expr:
    return Parser(text, symbols, invertible).parse()


#################### TREE UTILITIES ####################
def substitute(expr: Expr, mapping: Dict[str, Expr]) -> Expr:
    """Replace symbols by sub-trees; a replaced symbol under a power becomes a group."""
    if isinstance(expr, Num):
        return expr
    if isinstance(expr, Sym):
        if expr.name in mapping:
            return Group(mapping[expr.name])
        return expr
    if isinstance(expr, Neg):
        return Neg(substitute(expr.operand, mapping))
    if isinstance(expr, BinOp):
        return BinOp(expr.op, substitute(expr.left, mapping), substitute(expr.right, mapping))
    if isinstance(expr, Pow):
        return Pow(substitute(expr.base, mapping), expr.exponent)
    if isinstance(expr, Group):
        return Group(substitute(expr.inner, mapping))
    raise TypeError(f"not an expression node: {expr!r}")


def expr_text(expr: Expr) -> str:
    if isinstance(expr, Num):
        return str(expr.value)
    if isinstance(expr, Sym):
        return expr.name
    if isinstance(expr, Neg):
        return "-" + expr_text(expr.operand)
    if isinstance(expr, BinOp):
        sep = f" {expr.op} " if expr.op in "+-" else expr.op
        return expr_text(expr.left) + sep + expr_text(expr.right)
    if isinstance(expr, Pow):
        return f"{expr_text(expr.base)}^{expr.exponent}"
    if isinstance(expr, Group):
        return f"({expr_text(expr.inner)})"
    raise TypeError(f"not an expression node: {expr!r}")


#################### EVALUATION ####################
class Environment:
    """Symbol values, their inverses and the unit of the target algebra."""

    def __init__(self, values: Dict[str, object], inverses: Dict[str, Callable[[], object]], one):
        self.values = values
        self.inverses = inverses
        self.one = one

    @property
    def symbols(self):
        return set(self.values)

    @property
    def invertible(self):
        return set(self.inverses)

    def lookup(self, name: str):
        try:
            return self.values[name]
        except KeyError:
            raise ExpressionError(f"unknown symbol '{name}'") from None

    def inverse(self, name: str):
        try:
            factory = self.inverses[name]
        except KeyError:
            raise ExpressionError(f"'{name}' is not invertible in this context") from None
        return factory()

    def number(self, n: int):
        return self.one * n

    def unit_inverse(self, value):
        try:
            return value.inverse()
        except SkewAlgError as err:
            raise ExpressionError(f"division by a non-unit: {err}") from None


def evaluate(expr: Expr, env: Environment):
    if isinstance(expr, Num):
        return env.number(expr.value)
    if isinstance(expr, Sym):
        return env.lookup(expr.name)
    if isinstance(expr, Group):
        return evaluate(expr.inner, env)
    if isinstance(expr, Neg):
        return -evaluate(expr.operand, env)
    if isinstance(expr, BinOp):
        left = evaluate(expr.left, env)
        right = evaluate(expr.right, env)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        return left * env.unit_inverse(right)
    if isinstance(expr, Pow):
        if expr.exponent >= 0:
            base = evaluate(expr.base, env)
        elif isinstance(expr.base, Sym):
            base = env.inverse(expr.base.name)
        elif isinstance(expr.base, Num):
            base = env.unit_inverse(env.number(expr.base.value))
        else:
            raise ExpressionError("only symbols and integers can carry negative exponents")
        result = env.one
        for _ in range(abs(expr.exponent)):
            result = result * base
        return result
    raise TypeError(f"not an expression node: {expr!r}")
