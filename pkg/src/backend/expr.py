"""
Arithmetic expressions over F_p(x, y) for the command line.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | base ('^' signed_int)?
    base   := uint | var | '(' expr ')'

Variables are ``x``, ``y`` for two variables, ``x`` alone for one, and
``x1 .. xn`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from core.errors import ExprSyntaxError, UnknownVariable, ZeroDenominator
from core.field import PrimeChar, char_of
from core.poly import variable_names
from core.ratfn import RatFn

GRAMMAR = r"""
?start: expr

?expr: term
     | expr "+" term      -> sum
     | expr "-" term      -> difference

?term: factor
     | term "*" factor    -> product
     | term "/" factor    -> quotient

?factor: "-" factor       -> neg
       | base
       | base "^" SIGNED_INT -> power

?base: INT                -> int_lit
     | NAME               -> var
     | "(" expr ")"

NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.INT
%import common.SIGNED_INT
%import common.WS
%ignore WS
"""

_PARSER = Lark(GRAMMAR, parser="lalr", lexer="contextual", maybe_placeholders=False)


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class Var:
    index: int
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class Sum:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Difference:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Product:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Quotient:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Power:
    base: "ExprAst"
    exponent: int


ExprAst = Union[IntLit, Var, Neg, Sum, Difference, Product, Quotient, Power]


@v_args(inline=True)
class _ToAst(Transformer):
    def __init__(self, arity: int):
        super().__init__()
        self.names = {name: i for i, name in enumerate(variable_names(arity))}

    def int_lit(self, token: Token) -> IntLit:
        return IntLit(int(token))

    def var(self, token: Token) -> Var:
        name = str(token)
        if name not in self.names:
            raise UnknownVariable(f"unknown variable {name!r}; expected one of {', '.join(self.names)}")
        return Var(self.names[name], name)

    def neg(self, operand):
        return Neg(operand)

    def sum(self, left, right):
        return Sum(left, right)

    def difference(self, left, right):
        return Difference(left, right)

    def product(self, left, right):
        return Product(left, right)

    def quotient(self, left, right):
        return Quotient(left, right)

    def power(self, base, exponent: Token):
        return Power(base, int(exponent))


def parse_expr(text: str, arity: int = 2) -> ExprAst:
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as exc:
        position = getattr(exc, "pos_in_stream", None)
        if position is None or position < 0:
            position = len(text)
        raise ExprSyntaxError(f"cannot parse {text!r}", position) from None
    try:
        return _ToAst(arity).transform(tree)
    except VisitError as exc:
        raise exc.orig_exc from None


def eval_expr(ast: ExprAst, p: Union[PrimeChar, int], arity: int = 2) -> RatFn:
    """Evaluate into the canonical RatFn; negative powers become fractions."""
    char = p if isinstance(p, PrimeChar) else char_of(p)
    if isinstance(ast, IntLit):
        return RatFn.constant(ast.value, arity, char)
    if isinstance(ast, Var):
        return RatFn.var(ast.index, arity, char)
    if isinstance(ast, Neg):
        return -eval_expr(ast.operand, char, arity)
    if isinstance(ast, Power):
        base = eval_expr(ast.base, char, arity)
        if ast.exponent < 0 and base.is_zero:
            raise ZeroDenominator("negative power of zero")
        return base ** ast.exponent
    if not isinstance(ast, (Sum, Difference, Product, Quotient)):
        raise TypeError(f"not an expression node: {ast!r}")
    left = eval_expr(ast.left, char, arity)
    right = eval_expr(ast.right, char, arity)
    if isinstance(ast, Sum):
        return left + right
    if isinstance(ast, Difference):
        return left - right
    if isinstance(ast, Product):
        return left * right
    if right.is_zero:
        raise ZeroDenominator("division by the zero polynomial")
    return left / right


def parse_ratfn(text: str, p: Union[PrimeChar, int], arity: int = 2) -> RatFn:
    return eval_expr(parse_expr(text, arity), p, arity)
