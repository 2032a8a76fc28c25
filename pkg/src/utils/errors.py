"""Exception hierarchy shared by every rigidflow package."""
from typing import Any, Optional, Sequence, Tuple


class RigidFlowError(Exception):
    """Base class for all rigidflow errors."""


class ExpressionSyntaxError(RigidFlowError, ValueError):
    """Malformed expression text."""

    def __init__(self, message: str, text: str = "", position: int = 0,
                 token: Optional[str] = None,
                 component: Optional[Tuple[int, ...]] = None):
        self.message = message
        self.text = text
        self.position = position
        self.token = token
        self.component = component
        super().__init__(self._render())

    def _render(self) -> str:
        where = f" in component {self.component}" if self.component is not None else ""
        return f"{self.message} at position {self.position}{where}: {self.text!r}"

    def with_component(self, component: Tuple[int, ...]) -> "ExpressionSyntaxError":
        return ExpressionSyntaxError(self.message, self.text, self.position,
                                     self.token, tuple(component))


class UnknownSymbol(RigidFlowError, ValueError):
    """Identifier that is neither a coordinate, a parameter nor a function."""

    def __init__(self, name: str, component: Optional[Tuple[int, ...]] = None):
        self.name = name
        self.component = component
        where = f" in component {component}" if component is not None else ""
        super().__init__(f"Unknown symbol '{name}'{where}")

    def with_component(self, component: Tuple[int, ...]) -> "UnknownSymbol":
        return UnknownSymbol(self.name, tuple(component))


class DomainError(RigidFlowError, ArithmeticError):
    """Evaluation left the domain of a function (log, sqrt, division, overflow)."""

    def __init__(self, reason: str, subexpression: str):
        self.reason = reason
        self.subexpression = subexpression
        super().__init__(f"{reason} in {subexpression}")


class NumericalError(RigidFlowError):
    """Failure of a geometric computation at a sample point."""


class DegenerateMetric(NumericalError):
    def __init__(self, point: Sequence[float], det: float):
        self.point = list(point)
        self.det = det
        super().__init__(f"Degenerate metric at {self.point}: det g = {det:.3e}")


class TimelikeViolation(NumericalError):
    def __init__(self, point: Sequence[float], g_vv: float):
        self.point = list(point)
        self.g_vv = g_vv
        super().__init__(f"Flow is not timelike at {self.point}: g(V,V) = {g_vv:.6e}")


class FrameDegenerate(NumericalError):
    def __init__(self, point: Sequence[float], found: int, needed: int):
        self.point = list(point)
        super().__init__(
            f"Gram-Schmidt found {found} of {needed} frame vectors at {self.point}"
        )


class SkipSetUnstable(NumericalError):
    """Gram-Schmidt skip pattern changes near the point (frame branch point)."""

    def __init__(self, point: Sequence[float], candidate: int, norm2: float):
        self.point = list(point)
        self.candidate = candidate
        self.norm2 = norm2
        super().__init__(
            f"Frame branch point at {self.point}: candidate e_{candidate} "
            f"has squared norm {norm2:.3e}; move the sample point"
        )


class PreconditionViolated(RigidFlowError):
    def __init__(self, message: str, verdict: Any = None):
        self.verdict = verdict
        super().__init__(message)


class HypothesisUnmet(RigidFlowError):
    """Identity or theorem hypothesis does not hold for the scene."""


class ModeUnavailable(RigidFlowError):
    """Requested check mode cannot be used on this scene."""


class SchemaError(RigidFlowError, ValueError):
    def __init__(self, field: str, reason: str):
        self.field = field
        self.reason = reason
        super().__init__(f"Invalid field '{field}': {reason}")


class UnknownModel(RigidFlowError, ValueError):
    def __init__(self, name: str, known: Sequence[str] = ()):
        self.name = name
        hint = f" (known: {', '.join(known)})" if known else ""
        super().__init__(f"Unknown model '{name}'{hint}")


class ParamOutOfRange(RigidFlowError, ValueError):
    def __init__(self, name: str, value: Any, reason: str):
        self.name = name
        self.value = value
        super().__init__(f"Parameter {name}={value!r} out of range: {reason}")
