from .nodes import Expr, Number, Variable, Parameter, Unary, Binary, to_text, free_variables
from .parser import parse_expression
from .jets import Jet, Jet2, contract, stack, directional
from .evaluator import eval_jet2, evaluate, finite_difference_oracle

__all__ = [
    'Expr', 'Number', 'Variable', 'Parameter', 'Unary', 'Binary',
    'to_text', 'free_variables',
    'parse_expression',
    'Jet', 'Jet2', 'contract', 'stack', 'directional',
    'eval_jet2', 'evaluate', 'finite_difference_oracle',
]
