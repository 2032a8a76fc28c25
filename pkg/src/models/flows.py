"""Built-in flow families.

Rotations keep the first coordinate of their plane positive in the sampling
box: the adapted frame switches Gram-Schmidt branches where it vanishes.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from ..utils.errors import ParamOutOfRange
from .base_model import BaseFlowFamily, ExpectedVerdicts, ParameterSpec

MINKOWSKI_ONLY = ('minkowski',)
UNFORCED_METRICS = ('minkowski', 'constant_curvature', 'de_sitter', 'anti_de_sitter',
                    'einstein_static')


class StaticFlow(BaseFlowFamily):
    name = "static"
    description = "V = d_t"
    min_dimension = 2
    metrics = UNFORCED_METRICS

    def components(self, n: int) -> List[str]:
        return ["1"] + ["0"] * (n - 1)

    def expected(self, metric_params: Dict[str, float]) -> ExpectedVerdicts:
        return ExpectedVerdicts(rigid=True, rotational=False, killing=True)


class RotatingFlow(BaseFlowFamily):
    """V = d_t + omega (x_a d_b - x_b d_a)."""

    name = "rotating"
    description = "rigid rotation V = d_t + omega (x_a d_b - x_b d_a)"
    metrics = UNFORCED_METRICS
    parameters = (ParameterSpec('omega', 0.5, -2.0, 2.0),)

    def __init__(self, params: Optional[Dict[str, float]] = None,
                 plane: Tuple[int, int] = (1, 2)):
        super().__init__(params)
        a, b = (int(plane[0]), int(plane[1]))
        if a == b or min(a, b) < 1:
            raise ParamOutOfRange('plane', plane, "needs two distinct spatial axes >= 1")
        self.plane = (a, b)
        self.min_dimension = max(self.min_dimension, max(a, b) + 1)

    def components(self, n: int) -> List[str]:
        a, b = self.plane
        v = ["1"] + ["0"] * (n - 1)
        v[a] = f"-omega*x{b}"
        v[b] = f"omega*x{a}"
        return v

    def expected(self, metric_params: Dict[str, float]) -> ExpectedVerdicts:
        return ExpectedVerdicts(rigid=True, rotational=self.params['omega'] != 0.0,
                                killing=True)

    def restrict(self, lower: Sequence[float], upper: Sequence[float]
                 ) -> Tuple[List[float], List[float]]:
        lower, upper = list(lower), list(upper)
        a = min(self.plane)
        lower[a] = 0.25 * upper[a]
        return lower, upper


class HelicalFlow(RotatingFlow):
    """Rotation plus a uniform drift along the first axis outside the plane."""

    name = "helical"
    description = "V = d_t + omega (x_a d_b - x_b d_a) + velocity d_c"
    metrics = MINKOWSKI_ONLY
    parameters = (ParameterSpec('omega', 0.5, -2.0, 2.0),
                  ParameterSpec('velocity', 0.3, -0.9, 0.9))

    def __init__(self, params: Optional[Dict[str, float]] = None,
                 plane: Tuple[int, int] = (1, 2)):
        super().__init__(params, plane)
        self.axis = next(c for c in range(1, max(self.plane) + 2) if c not in self.plane)
        self.min_dimension = max(self.min_dimension, self.axis + 1)

    def components(self, n: int) -> List[str]:
        v = super().components(n)
        v[self.axis] = "velocity"
        return v


class PerturbedRotatingFlow(RotatingFlow):
    """Rotation with V^b += epsilon x_a^2: still rotating, no longer rigid."""

    name = "perturbed_rotating"
    description = "rotating flow plus epsilon x_a^2 d_b"
    metrics = MINKOWSKI_ONLY
    parameters = (ParameterSpec('omega', 0.5, -2.0, 2.0),
                  ParameterSpec('epsilon', 0.2, -1.0, 1.0))

    def components(self, n: int) -> List[str]:
        a, b = self.plane
        v = super().components(n)
        v[b] = f"omega*x{a} + epsilon*x{a}^2"
        return v

    def expected(self, metric_params: Dict[str, float]) -> ExpectedVerdicts:
        exact = self.params['epsilon'] == 0.0
        return ExpectedVerdicts(rigid=exact, rotational=self.params['omega'] != 0.0,
                                killing=exact)


class BoostFlow(BaseFlowFamily):
    name = "boost"
    description = "V = x1 d_t + t d_x1, timelike for |x1| > |t|"
    metrics = MINKOWSKI_ONLY
    min_dimension = 2

    def components(self, n: int) -> List[str]:
        return ["x1", "t"] + ["0"] * (n - 2)

    def expected(self, metric_params: Dict[str, float]) -> ExpectedVerdicts:
        return ExpectedVerdicts(rigid=True, rotational=False, killing=True)

    def restrict(self, lower: Sequence[float], upper: Sequence[float]
                 ) -> Tuple[List[float], List[float]]:
        lower, upper = list(lower), list(upper)
        lower[0], upper[0] = 0.1, 0.5
        lower[1], upper[1] = 1.0, 2.0
        return lower, upper


class MilneFlow(BaseFlowFamily):
    name = "milne"
    description = "V = t d_t + x1 d_x1, expanding, timelike for t > |x1|"
    metrics = MINKOWSKI_ONLY
    min_dimension = 2

    def components(self, n: int) -> List[str]:
        return ["t", "x1"] + ["0"] * (n - 2)

    def expected(self, metric_params: Dict[str, float]) -> ExpectedVerdicts:
        return ExpectedVerdicts(rigid=False, rotational=False, killing=False)

    def restrict(self, lower: Sequence[float], upper: Sequence[float]
                 ) -> Tuple[List[float], List[float]]:
        lower, upper = list(lower), list(upper)
        lower[0], upper[0] = 1.5, 2.0
        lower[1], upper[1] = 0.1, 0.5
        return lower, upper


class FermiRigidFlow(BaseFlowFamily):
    """V = d_t on the fermi_rigid metric: rigid, irrotational, Killing only for a1 = 0."""

    name = "fermi_rigid"
    description = "V = d_t for an observer with time-dependent acceleration"
    metrics = ('fermi_rigid',)
    min_dimension = 2

    def components(self, n: int) -> List[str]:
        return ["1"] + ["0"] * (n - 1)

    def expected(self, metric_params: Dict[str, float]) -> ExpectedVerdicts:
        return ExpectedVerdicts(rigid=True, rotational=False,
                                killing=metric_params.get('a1', 0.0) == 0.0)


FLOWS = {
    cls.name: cls for cls in (
        StaticFlow, RotatingFlow, HelicalFlow, PerturbedRotatingFlow,
        BoostFlow, MilneFlow, FermiRigidFlow,
    )
}
