"""Built-in metric families over coordinates (t, x1, ..., x{n-1})."""
from typing import List, Optional

import numpy as np

from ..utils.errors import ParamOutOfRange
from .base_model import BaseMetricFamily, ParameterSpec


def _rho2(n: int) -> str:
    return "(" + " + ".join(f"x{i}^2" for i in range(1, n)) + ")"


def _diagonal(n: int, time: str, space: str) -> List[List[str]]:
    rows = [["0"] * n for _ in range(n)]
    rows[0][0] = time
    for i in range(1, n):
        rows[i][i] = space
    return rows


class MinkowskiMetric(BaseMetricFamily):
    name = "minkowski"
    description = "flat spacetime, g = diag(-1, 1, ..., 1)"
    min_dimension = 2

    def components(self, n: int) -> List[List[str]]:
        return _diagonal(n, "-1", "1")

    @property
    def kappa(self) -> Optional[float]:
        return 0.0


class ConstantCurvatureMetric(BaseMetricFamily):
    """Static chart of de Sitter (k > 0) or anti-de Sitter (k < 0), valid for k rho^2 < 1.

    g_00 = -(1 - k rho^2), g_ij = delta_ij + k x_i x_j / (1 - k rho^2).
    """

    name = "constant_curvature"
    description = "static chart of constant curvature k (de Sitter k > 0, anti-de Sitter k < 0)"
    parameters = (ParameterSpec('k', 1.0, -4.0, 4.0),)

    def components(self, n: int) -> List[List[str]]:
        rho2 = _rho2(n)
        rows = [["0"] * n for _ in range(n)]
        rows[0][0] = f"-(1 - k*{rho2})"
        for i in range(1, n):
            for j in range(i, n):
                term = f"k*x{i}*x{j}/(1 - k*{rho2})"
                rows[i][j] = rows[j][i] = f"1 + {term}" if i == j else term
        return rows

    @property
    def kappa(self) -> Optional[float]:
        return self.params['k']

    def spatial_extent(self, n: int) -> float:
        k = self.params['k']
        return 1.0 / np.sqrt((n - 1) * k) if k > 0 else 1.0


class DeSitterMetric(ConstantCurvatureMetric):
    name = "de_sitter"
    description = "constant_curvature with positive k (default 1)"
    parameters = (ParameterSpec('k', 1.0, 1e-3, 4.0),)


class AntiDeSitterMetric(ConstantCurvatureMetric):
    name = "anti_de_sitter"
    description = "constant_curvature with negative k (default -1)"
    parameters = (ParameterSpec('k', -1.0, -4.0, -1e-3),)


class EinsteinStaticMetric(BaseMetricFamily):
    """-dt^2 + 4 delta_ij / (1 + rho^2)^2: a unit round sphere in stereographic coordinates."""

    name = "einstein_static"
    description = "R x unit sphere, homogeneous but not of constant curvature"

    def components(self, n: int) -> List[List[str]]:
        return _diagonal(n, "-1", f"4/(1 + {_rho2(n)})^2")


class FermiRigidMetric(BaseMetricFamily):
    """Flat metric seen by a rigid observer with acceleration a0 + a1 sin(t) along x1."""

    name = "fermi_rigid"
    description = "flat chart -(1 + a(t) x1)^2 dt^2 + dx^2 with a(t) = a0 + a1 sin(t)"
    default_flow = 'fermi_rigid'
    time_range = (0.0, 2.0)
    parameters = (ParameterSpec('a0', 0.3, -0.45, 0.45), ParameterSpec('a1', 0.1, -0.45, 0.45))

    def __init__(self, params=None):
        super().__init__(params)
        bound = abs(self.params['a0']) + abs(self.params['a1'])
        if bound >= 0.9:
            raise ParamOutOfRange('a0+a1', bound, "|a0| + |a1| must stay below 0.9 "
                                                  "so the lapse is positive for |x1| <= 1")

    def components(self, n: int) -> List[List[str]]:
        return _diagonal(n, "-(1 + (a0 + a1*sin(t))*x1)^2", "1")

    @property
    def kappa(self) -> Optional[float]:
        return 0.0


METRICS = {
    cls.name: cls for cls in (
        MinkowskiMetric, ConstantCurvatureMetric, DeSitterMetric, AntiDeSitterMetric,
        EinsteinStaticMetric, FermiRigidMetric,
    )
}
