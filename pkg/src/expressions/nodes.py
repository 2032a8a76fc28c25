"""Immutable expression tree."""
from dataclasses import dataclass
from typing import Union

UNARY_FUNCTIONS = ('sin', 'cos', 'sinh', 'cosh', 'tanh', 'exp', 'log', 'sqrt')
BINARY_SYMBOLS = {'add': '+', 'sub': '-', 'mul': '*', 'div': '/', 'pow': '^'}


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Variable:
    """Coordinate reference; `index` is the coordinate position."""
    name: str
    index: int


@dataclass(frozen=True)
class Parameter:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str  # 'neg' or one of UNARY_FUNCTIONS
    operand: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str  # key of BINARY_SYMBOLS
    left: "Expr"
    right: "Expr"


Expr = Union[Number, Variable, Parameter, Unary, Binary]


def to_text(expr: Expr) -> str:
    """Render fully parenthesized text that parses back to an equivalent tree."""
    if isinstance(expr, Number):
        text = repr(float(expr.value))
        return f"(-{text[1:]})" if text.startswith('-') else text
    if isinstance(expr, (Variable, Parameter)):
        return expr.name
    if isinstance(expr, Unary):
        inner = to_text(expr.operand)
        if expr.op == 'neg':
            return f"(-{inner})"
        return f"{expr.op}({inner})"
    if isinstance(expr, Binary):
        return f"({to_text(expr.left)} {BINARY_SYMBOLS[expr.op]} {to_text(expr.right)})"
    raise TypeError(f"Not an expression node: {expr!r}")


def free_variables(expr: Expr) -> frozenset:
    """Coordinate indices referenced by the tree."""
    if isinstance(expr, Variable):
        return frozenset([expr.index])
    if isinstance(expr, Unary):
        return free_variables(expr.operand)
    if isinstance(expr, Binary):
        return free_variables(expr.left) | free_variables(expr.right)
    return frozenset()
