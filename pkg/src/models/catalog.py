"""Model catalog: metric family + flow family -> Scene with a safe sampling box."""
import itertools
import logging
from dataclasses import replace
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..geometry.scene import Scene
from ..utils.errors import ParamOutOfRange, RigidFlowError, UnknownModel
from .base_model import BaseFlowFamily, BaseMetricFamily, ExpectedVerdicts, ModelDescriptor
from .flows import FLOWS, RotatingFlow
from .metrics import METRICS

logger = logging.getLogger(__name__)

TIMELIKE_MARGIN = 0.05
SHRINK = 0.95
FINAL_MARGIN = 0.05
MAX_SHRINKS = 400
DEFAULT_DIMENSION = 4


def _parse_plane(value: Union[str, Sequence[int]]) -> Tuple[int, int]:
    if isinstance(value, str):
        value = [v for v in value.replace(',', ' ').split() if v]
    try:
        a, b = (int(v) for v in value)
    except (TypeError, ValueError):
        raise ParamOutOfRange('plane', value, "expected two axis indices such as 1,2") from None
    return a, b


def _metric_family(name: str, params: Optional[Dict[str, float]]) -> BaseMetricFamily:
    if name not in METRICS:
        raise UnknownModel(name, sorted(METRICS))
    return METRICS[name](params)


def _flow_family(name: str, params: Optional[Dict[str, Any]]) -> BaseFlowFamily:
    if name not in FLOWS:
        raise UnknownModel(name, sorted(FLOWS))
    params = dict(params or {})
    plane = params.pop('plane', None)
    cls = FLOWS[name]
    if issubclass(cls, RotatingFlow):
        return cls(params, plane=(1, 2) if plane is None else _parse_plane(plane))
    if plane is not None:
        raise ParamOutOfRange('plane', plane, f"flow {name} takes no plane")
    return cls(params)


def _probe_is_timelike(scene: Scene, lower: np.ndarray, upper: np.ndarray) -> bool:
    axes = [np.linspace(lo, hi, 3) for lo, hi in zip(lower, upper)]
    for point in itertools.product(*axes):
        try:
            if scene.flow_norm(point) > -TIMELIKE_MARGIN:
                return False
        except RigidFlowError:
            return False
    return True


def recommended_domain(scene: Scene, metric: BaseMetricFamily, flow: BaseFlowFamily
                       ) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    """Box where the flow is timelike with margin, shrunk 5% about its centre.

    Spatial bounds are scaled towards the origin until g(V,V) <= -0.05 on a
    3^n probe grid.
    """
    lower, upper = flow.restrict(*metric.box(scene.n))
    lower, upper = np.array(lower), np.array(upper)
    for _ in range(MAX_SHRINKS):
        if _probe_is_timelike(scene, lower, upper):
            break
        lower[1:] *= SHRINK
        upper[1:] *= SHRINK
    else:
        raise ParamOutOfRange('parameters', dict(scene.params),
                              f"no timelike box found for {scene.name}")
    centre, half = 0.5 * (lower + upper), 0.5 * (upper - lower) * (1.0 - FINAL_MARGIN)
    return tuple(float(v) for v in centre - half), tuple(float(v) for v in centre + half)


def build_model(name: str, dimension: int = DEFAULT_DIMENSION,
                params: Optional[Dict[str, float]] = None,
                flow: Optional[str] = None,
                flow_params: Optional[Dict[str, Any]] = None) -> Scene:
    """Scene for a catalog metric and flow, with its recommended domain attached."""
    metric = _metric_family(name, params)
    flow_name = flow or metric.default_flow
    flow_family = _flow_family(flow_name, flow_params)
    if not flow_family.supports(name):
        raise ParamOutOfRange('flow', flow_name,
                              f"not available on {name} (supported: {list(flow_family.metrics)})")
    n = int(dimension)
    metric.check_dimension(n)
    flow_family.check_dimension(n)

    scene = Scene.from_texts(
        coords=metric.coordinates(n),
        metric=metric.components(n),
        flow=flow_family.components(n),
        params={**metric.params, **flow_family.params},
        kappa=metric.kappa,
        name=f"{name}/{flow_name}",
    )
    lower, upper = recommended_domain(scene, metric, flow_family)
    logger.info(f"Built {scene.name} in dimension {n}: domain {lower} .. {upper}")
    return scene.with_domain(lower, upper)


def expected_verdicts(name: str, flow: Optional[str] = None,
                      params: Optional[Dict[str, float]] = None,
                      flow_params: Optional[Dict[str, Any]] = None) -> ExpectedVerdicts:
    metric = _metric_family(name, params)
    flow_family = _flow_family(flow or metric.default_flow, flow_params)
    return replace(flow_family.expected(metric.params), kappa=metric.kappa)


def list_models(with_domains: bool = False) -> List[ModelDescriptor]:
    """All metric and flow families; domains are computed in dimension 4 on request."""
    descriptors = []
    for name, cls in METRICS.items():
        family = cls()
        domain = build_model(name).domain if with_domains else None
        descriptors.append(ModelDescriptor(
            name=name, kind='metric', description=family.description,
            min_dimension=family.min_dimension, parameters=family.parameters,
            kappa=family.kappa, domain=domain,
        ))
    for name, cls in FLOWS.items():
        family = cls()
        host = family.metrics[0] if family.metrics else 'minkowski'
        domain = build_model(host, flow=name).domain if with_domains else None
        descriptors.append(ModelDescriptor(
            name=name, kind='flow', description=family.description,
            min_dimension=family.min_dimension, parameters=family.parameters,
            expected=family.expected(METRICS[host]().params), metrics=family.metrics,
            domain=domain,
        ))
    return descriptors
