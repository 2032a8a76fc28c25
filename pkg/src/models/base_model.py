from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

from ..utils.errors import ParamOutOfRange
from ..utils.validators import validate_params

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParameterSpec:
    name: str
    default: float
    low: float
    high: float

    def to_dict(self) -> Dict[str, float]:
        return {'default': self.default, 'range': [self.low, self.high]}


@dataclass(frozen=True)
class ExpectedVerdicts:
    rigid: bool
    rotational: bool
    killing: bool
    kappa: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {'rigid': self.rigid, 'rotational': self.rotational,
                'killing': self.killing, 'kappa': self.kappa}


@dataclass(frozen=True)
class ModelDescriptor:
    """Catalog entry for one metric or flow family."""
    name: str
    kind: str
    description: str
    min_dimension: int
    parameters: Tuple[ParameterSpec, ...]
    kappa: Optional[float] = None
    expected: Optional[ExpectedVerdicts] = None
    metrics: Optional[Tuple[str, ...]] = None
    domain: Optional[Tuple[Tuple[float, ...], Tuple[float, ...]]] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'name': self.name,
            'kind': self.kind,
            'description': self.description,
            'min_dimension': self.min_dimension,
            'parameters': {p.name: p.to_dict() for p in self.parameters},
        }
        if self.kind == 'metric':
            data['kappa'] = self.kappa
        else:
            data['expected'] = None if self.expected is None else self.expected.to_dict()
            data['metrics'] = None if self.metrics is None else list(self.metrics)
        if self.domain is not None:
            data['domain'] = {'min': list(self.domain[0]), 'max': list(self.domain[1])}
        return data


class _Family(ABC):
    name = "family"
    description = ""
    min_dimension = 3
    parameters: Tuple[ParameterSpec, ...] = ()

    def __init__(self, params: Optional[Dict[str, float]] = None):
        default_params = {p.name: p.default for p in self.parameters}
        if params:
            validate_params(params, {p.name: (p.low, p.high) for p in self.parameters})
            default_params.update({k: float(v) for k, v in params.items()})
        self.params = default_params

    def check_dimension(self, n: int) -> None:
        if n < self.min_dimension:
            raise ParamOutOfRange('dimension', n, f"{self.name} needs dimension >= "
                                                  f"{self.min_dimension}")

    @staticmethod
    def coordinates(n: int) -> List[str]:
        return ['t'] + [f"x{i}" for i in range(1, n)]


class BaseMetricFamily(_Family):
    """A metric family g_{mu nu}(t, x1, ...) in closed form."""

    default_flow = 'static'
    time_range = (-1.0, 1.0)

    @abstractmethod
    def components(self, n: int) -> List[List[str]]:
        """Upper-triangle-complete metric component texts."""
        pass

    @property
    def kappa(self) -> Optional[float]:
        """Declared constant sectional curvature, None if not constant."""
        return None

    def spatial_extent(self, n: int) -> float:
        return 1.0

    def box(self, n: int) -> Tuple[List[float], List[float]]:
        h = self.spatial_extent(n)
        return [self.time_range[0]] + [-h] * (n - 1), [self.time_range[1]] + [h] * (n - 1)


class BaseFlowFamily(_Family):
    """A flow V^mu in closed form, optionally tied to particular metrics."""

    metrics: Optional[Tuple[str, ...]] = None

    @abstractmethod
    def components(self, n: int) -> List[str]:
        """Flow component texts."""
        pass

    @abstractmethod
    def expected(self, metric_params: Dict[str, float]) -> ExpectedVerdicts:
        pass

    def restrict(self, lower: Sequence[float], upper: Sequence[float]
                 ) -> Tuple[List[float], List[float]]:
        """Flow-specific restriction of the metric's sampling box."""
        return list(lower), list(upper)

    def supports(self, metric_name: str) -> bool:
        return self.metrics is None or metric_name in self.metrics
