"""Polynomial expression grammar shared by `Poly.parse` and the script language.

Expressions keep their written shape (parentheses included) so a script can be
printed back exactly; `evaluate` turns them into canonical `Poly` values.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from src.exception import NotDivisible, ParseError, SignatureMismatch
from src.exactalg.poly import Poly

EXPR_RULES = r"""
?expr: term
     | expr "+" term      -> add
     | expr "-" term      -> sub
?term: factor
     | term "*" factor    -> mul
     | term "/" factor    -> div
?factor: power
       | "-" factor       -> neg
?power: atom
      | atom "^" INT      -> pow
?atom: INT                -> number
     | NAME               -> var
     | "(" expr ")"       -> paren
"""

COMMON_TERMINALS = r"""
NAME: /[A-Za-z_][A-Za-z0-9_]*/
%import common.INT
%import common.WS
COMMENT: /#[^\n]*/
%ignore WS
%ignore COMMENT
"""


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


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
class Paren:
    inner: "Expr"


Expr = Union[Num, Var, Neg, BinOp, Pow, Paren]


class ExprBuilder(Transformer):
    """Lark transformer producing Expr nodes; the script parser subclasses it."""

    @v_args(inline=True)
    def number(self, token):
        return Num(int(token))

    @v_args(inline=True)
    def var(self, token):
        return Var(str(token))

    @v_args(inline=True)
    def neg(self, arg):
        return Neg(arg)

    @v_args(inline=True)
    def add(self, left, right):
        return BinOp("+", left, right)

    @v_args(inline=True)
    def sub(self, left, right):
        return BinOp("-", left, right)

    @v_args(inline=True)
    def mul(self, left, right):
        return BinOp("*", left, right)

    @v_args(inline=True)
    def div(self, left, right):
        return BinOp("/", left, right)

    @v_args(inline=True)
    def pow(self, base, exponent):
        return Pow(base, int(exponent))

    @v_args(inline=True)
    def paren(self, inner):
        return Paren(inner)


_BINARY_FORMAT = {"+": "{} + {}", "-": "{} - {}", "*": "{}*{}", "/": "{}/{}"}


def format_expr(expr: Expr) -> str:
    """Canonical spelling of an expression tree (spaces around + and - only)."""
    if isinstance(expr, Num):
        return str(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Neg):
        return "-" + format_expr(expr.arg)
    if isinstance(expr, Pow):
        return f"{format_expr(expr.base)}^{expr.exponent}"
    if isinstance(expr, Paren):
        return f"({format_expr(expr.inner)})"
    return _BINARY_FORMAT[expr.op].format(format_expr(expr.left), format_expr(expr.right))


def evaluate(expr: Expr, ring: Sequence[str]) -> Poly:
    ring = tuple(ring)
    if isinstance(expr, Num):
        return Poly.constant(ring, expr.value)
    if isinstance(expr, Var):
        if expr.name not in ring:
            raise SignatureMismatch(f"unknown variable {expr.name!r}; ring has {', '.join(ring) or 'no variables'}")
        return Poly.variable(ring, expr.name)
    if isinstance(expr, Neg):
        return -evaluate(expr.arg, ring)
    if isinstance(expr, Pow):
        return evaluate(expr.base, ring) ** expr.exponent
    if isinstance(expr, Paren):
        return evaluate(expr.inner, ring)
    left = evaluate(expr.left, ring)
    right = evaluate(expr.right, ring)
    if expr.op == "+":
        return left + right
    if expr.op == "-":
        return left - right
    if expr.op == "*":
        return left * right
    if not right.is_constant or right.is_zero:
        raise NotDivisible(f"division is only allowed by nonzero constants, got {right}")
    return left.scale(1 / Fraction(right.constant_value))


def lark_error(exc: UnexpectedInput, text: str) -> ParseError:
    """Translate a Lark failure into a ParseError with location and expected set."""
    if isinstance(exc, UnexpectedToken):
        expected = [str(name) for name in exc.expected]
        found = "end of input" if exc.token.type == "$END" else repr(str(exc.token))
        return ParseError(f"unexpected {found}", exc.line, exc.column, expected)
    if isinstance(exc, UnexpectedCharacters):
        return ParseError(f"unexpected character {text[exc.pos_in_stream]!r}", exc.line, exc.column,
                          [str(name) for name in exc.allowed or []])
    if isinstance(exc, UnexpectedEOF):
        lines = text.splitlines() or [""]
        return ParseError("unexpected end of input", len(lines), len(lines[-1]) + 1,
                          [str(name) for name in exc.expected])
    return ParseError(str(exc), getattr(exc, "line", 0), getattr(exc, "column", 0))


_POLY_PARSER = Lark("?start: expr\n" + EXPR_RULES + COMMON_TERMINALS, parser="lalr")


def parse_expr(text: str) -> Expr:
    try:
        tree = _POLY_PARSER.parse(text)
    except UnexpectedInput as exc:
        raise lark_error(exc, text) from None
    return ExprBuilder().transform(tree)


def parse_poly(text: str, ring: Sequence[str]) -> Poly:
    return evaluate(parse_expr(text), ring)
