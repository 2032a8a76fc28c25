"""Evaluation of expression trees to values and second-order jets."""
import logging
import math
from abc import ABC, abstractmethod
from typing import Any, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..utils.errors import DomainError, UnknownSymbol
from .jets import Jet
from .nodes import Binary, Expr, Number, Parameter, Unary, Variable, free_variables, to_text

logger = logging.getLogger(__name__)

MAX_INTEGER_EXPONENT = 1024


class BaseEvaluator(ABC):
    """Walks an expression tree; subclasses supply the number system."""

    def __init__(self, point: Sequence[float], params: Optional[Mapping[str, float]] = None):
        self.point = np.asarray(point, dtype=float)
        self.params = dict(params or {})

    @abstractmethod
    def constant(self, value: float) -> Any:
        pass

    @abstractmethod
    def variable(self, index: int) -> Any:
        pass

    @abstractmethod
    def value_of(self, x: Any) -> float:
        """Plain float value of an evaluated operand."""
        pass

    @abstractmethod
    def function(self, name: str, x: Any) -> Any:
        pass

    @abstractmethod
    def real_power(self, base: Any, exponent: Any) -> Any:
        pass

    @abstractmethod
    def is_finite(self, x: Any) -> bool:
        pass

    def evaluate(self, expr: Expr) -> Any:
        result = self._visit(expr)
        if not self.is_finite(result):
            raise DomainError("non-finite result", to_text(expr))
        return result

    def _visit(self, node: Expr) -> Any:
        if isinstance(node, Number):
            return self.constant(node.value)
        if isinstance(node, Variable):
            if not 0 <= node.index < len(self.point):
                raise UnknownSymbol(node.name)
            return self.variable(node.index)
        if isinstance(node, Parameter):
            if node.name not in self.params:
                raise UnknownSymbol(node.name)
            return self.constant(float(self.params[node.name]))
        if isinstance(node, Unary):
            x = self.evaluate(node.operand)
            if node.op == 'neg':
                return -x
            self._check_function_domain(node, self.value_of(x))
            return self.function(node.op, x)
        if isinstance(node, Binary):
            return self._binary(node)
        raise TypeError(f"Not an expression node: {node!r}")

    def _check_function_domain(self, node: Unary, value: float) -> None:
        if node.op == 'log' and value <= 0.0:
            raise DomainError(f"log of non-positive value {value:.6g}", to_text(node))
        if node.op == 'sqrt' and value < 0.0:
            raise DomainError(f"sqrt of negative value {value:.6g}", to_text(node))

    def _binary(self, node: Binary) -> Any:
        left = self.evaluate(node.left)
        if node.op == 'pow':
            return self._power(node, left)
        right = self.evaluate(node.right)
        if node.op == 'add':
            return left + right
        if node.op == 'sub':
            return left - right
        if node.op == 'mul':
            return left * right
        if node.op == 'div':
            if self.value_of(right) == 0.0:
                raise DomainError("division by zero", to_text(node))
            return left / right
        raise TypeError(f"Unknown binary operator {node.op!r}")

    def _power(self, node: Binary, base: Any) -> Any:
        exponent = self.evaluate(node.right)
        k = self.value_of(exponent)
        if not free_variables(node.right) and float(k).is_integer() \
                and abs(k) <= MAX_INTEGER_EXPONENT:
            k = int(k)
            if k < 0 and self.value_of(base) == 0.0:
                raise DomainError("zero raised to a negative power", to_text(node))
            result = self._integer_power(base, abs(k))
            return self.constant(1.0) / result if k < 0 else result
        if self.value_of(base) <= 0.0:
            raise DomainError(
                f"non-integer power of non-positive base {self.value_of(base):.6g}",
                to_text(node),
            )
        return self.real_power(base, exponent)

    def _integer_power(self, base: Any, k: int) -> Any:
        result = self.constant(1.0)
        square = base
        while k:
            if k & 1:
                result = result * square
            k >>= 1
            if k:
                square = square * square
        return result


class ValueEvaluator(BaseEvaluator):
    """Plain floating point evaluation."""

    def constant(self, value: float) -> float:
        return float(value)

    def variable(self, index: int) -> float:
        return float(self.point[index])

    def value_of(self, x: float) -> float:
        return x

    def function(self, name: str, x: float) -> float:
        try:
            return getattr(math, name)(x)
        except OverflowError:
            return math.inf

    def real_power(self, base: float, exponent: float) -> float:
        try:
            return math.exp(exponent * math.log(base))
        except OverflowError:
            return math.inf

    def is_finite(self, x: float) -> bool:
        return math.isfinite(x)


class JetEvaluator(BaseEvaluator):
    """Second-order forward-mode evaluation."""

    def __init__(self, point: Sequence[float], params: Optional[Mapping[str, float]] = None):
        super().__init__(point, params)
        self.dim = len(self.point)

    def constant(self, value: float) -> Jet:
        return Jet.constant(value, self.dim)

    def variable(self, index: int) -> Jet:
        return Jet.variable(self.point, index)

    def value_of(self, x: Jet) -> float:
        return float(x.value)

    def _check_function_domain(self, node: Unary, value: float) -> None:
        super()._check_function_domain(node, value)
        if node.op == 'sqrt' and value == 0.0:
            raise DomainError("sqrt at zero has no derivative", to_text(node))

    def function(self, name: str, x: Jet) -> Jet:
        with np.errstate(over='ignore', invalid='ignore', divide='ignore'):
            return getattr(x, name)()

    def real_power(self, base: Jet, exponent: Jet) -> Jet:
        with np.errstate(over='ignore', invalid='ignore'):
            return (exponent * base.log()).exp()

    def is_finite(self, x: Jet) -> bool:
        return x.is_finite()


def evaluate(expr: Expr, point: Sequence[float],
             params: Optional[Mapping[str, float]] = None) -> float:
    """Value of `expr` at `point`."""
    return ValueEvaluator(point, params).evaluate(expr)


def eval_jet2(expr: Expr, point: Sequence[float],
              params: Optional[Mapping[str, float]] = None) -> Jet:
    """Value, gradient and Hessian of `expr` at `point`."""
    jet = JetEvaluator(point, params).evaluate(expr)
    hessian = jet.hessian
    # one value per unordered index pair
    hessian = 0.5 * (hessian + hessian.T)
    return Jet(float(jet.value), jet.gradient.copy(), hessian)


def finite_difference_oracle(expr: Expr, point: Sequence[float],
                             params: Optional[Mapping[str, float]] = None,
                             step: float = 1e-4) -> Tuple[np.ndarray, np.ndarray]:
    """Central-difference gradient and Hessian of `expr` at `point`."""
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    x = np.asarray(point, dtype=float)
    n = len(x)
    f = lambda p: evaluate(expr, p, params)
    basis = np.eye(n) * step

    gradient = np.array([(f(x + basis[i]) - f(x - basis[i])) / (2 * step) for i in range(n)])

    hessian = np.zeros((n, n))
    f0 = f(x)
    for i in range(n):
        hessian[i, i] = (f(x + basis[i]) - 2 * f0 + f(x - basis[i])) / step ** 2
        for j in range(i + 1, n):
            hessian[i, j] = hessian[j, i] = (
                f(x + basis[i] + basis[j]) - f(x + basis[i] - basis[j])
                - f(x - basis[i] + basis[j]) + f(x - basis[i] - basis[j])
            ) / (4 * step ** 2)

    return gradient, hessian
