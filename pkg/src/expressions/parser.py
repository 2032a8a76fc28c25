"""Expression language parser built on a lark LALR grammar."""
import logging
from typing import Sequence

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from ..utils.errors import ExpressionSyntaxError, UnknownSymbol
from .nodes import Binary, Expr, Number, Parameter, Unary, UNARY_FUNCTIONS, Variable

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?start: expr

?expr: term
     | expr "+" term      -> add
     | expr "-" term      -> sub

?term: factor
     | term "*" factor    -> mul
     | term "/" factor    -> div

?factor: "-" factor       -> neg
       | base "^" factor  -> pow
       | base

?base: NUMBER             -> number
     | NAME "(" expr ")"  -> call
     | NAME               -> symbol
     | "(" expr ")"

NUMBER: /(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?/
NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.WS
%ignore WS
"""

_PARSER = Lark(GRAMMAR, parser='lalr', maybe_placeholders=False)


@v_args(inline=True)
class _TreeBuilder(Transformer):
    """Turns the lark parse tree into expression nodes, resolving names."""

    def __init__(self, coords: Sequence[str], params: Sequence[str]):
        super().__init__()
        self.coords = {name: i for i, name in enumerate(coords)}
        self.params = set(params)

    def number(self, token):
        return Number(float(token))

    def symbol(self, token):
        name = str(token)
        if name in self.coords:
            return Variable(name, self.coords[name])
        if name in self.params:
            return Parameter(name)
        raise UnknownSymbol(name)

    def call(self, token, argument):
        name = str(token)
        if name not in UNARY_FUNCTIONS:
            raise UnknownSymbol(name)
        return Unary(name, argument)

    def neg(self, operand):
        return Unary('neg', operand)

    def add(self, left, right):
        return Binary('add', left, right)

    def sub(self, left, right):
        return Binary('sub', left, right)

    def mul(self, left, right):
        return Binary('mul', left, right)

    def div(self, left, right):
        return Binary('div', left, right)

    def pow(self, left, right):
        return Binary('pow', left, right)


def _syntax_error(exc: UnexpectedInput, text: str) -> ExpressionSyntaxError:
    token = getattr(exc, 'token', None)
    if isinstance(exc, UnexpectedEOF) or (token is not None and token.type == '$END'):
        return ExpressionSyntaxError("Unexpected end of expression", text, len(text))
    if isinstance(exc, UnexpectedCharacters):
        return ExpressionSyntaxError(
            f"Unexpected character {exc.char!r}", text, exc.pos_in_stream, exc.char
        )
    if token is not None:
        position = token.start_pos if token.start_pos is not None else len(text)
        return ExpressionSyntaxError(
            f"Unexpected token {str(token)!r}", text, position, str(token)
        )
    return ExpressionSyntaxError(str(exc), text, getattr(exc, 'pos_in_stream', 0) or 0)


def parse_expression(text: str, coords: Sequence[str],
                     params: Sequence[str] = ()) -> Expr:
    """Parse `text` into an expression tree over the given coordinates and parameters."""
    if not text or not text.strip():
        raise ExpressionSyntaxError("Empty expression", text or "", 0)

    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as e:
        raise _syntax_error(e, text) from None

    try:
        return _TreeBuilder(coords, params).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, UnknownSymbol):
            raise e.orig_exc from None
        logger.error(f"Failed to build expression tree for {text!r}: {e.orig_exc}")
        raise
