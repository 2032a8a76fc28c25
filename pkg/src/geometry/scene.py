"""Scene: a metric and a flow given as coordinate expressions."""
import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..expressions.evaluator import eval_jet2, evaluate
from ..expressions.jets import Jet
from ..expressions.nodes import Expr, to_text
from ..expressions.parser import parse_expression
from ..utils.errors import ExpressionSyntaxError, SchemaError, UnknownSymbol
from ..utils.validators import validate_box, validate_point

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Scene:
    """Metric g_{mu nu} and flow V^mu over named coordinates."""
    coords: Tuple[str, ...]
    metric: Tuple[Tuple[Expr, ...], ...]
    flow: Tuple[Expr, ...]
    params: Mapping[str, float] = field(default_factory=dict)
    model_kappa: Optional[float] = None
    domain: Optional[Tuple[Tuple[float, ...], Tuple[float, ...]]] = None
    name: str = "scene"

    @property
    def n(self) -> int:
        return len(self.coords)

    @classmethod
    def from_texts(cls, coords: Sequence[str], metric: Sequence[Sequence[Optional[str]]],
                   flow: Sequence[str], params: Optional[Mapping[str, float]] = None,
                   kappa: Optional[float] = None,
                   domain: Optional[Tuple[Sequence[float], Sequence[float]]] = None,
                   name: str = "scene") -> "Scene":
        """Parse component texts; the upper triangle of `metric` is authoritative.

        Lower-triangle entries may be None or empty, otherwise they must match
        the mirrored upper-triangle text exactly.
        """
        coords = tuple(coords)
        params = {str(k): float(v) for k, v in (params or {}).items()}
        n = len(coords)
        if n < 2:
            raise SchemaError('dimension', f"must be at least 2, got {n}")
        if len(set(coords)) != n:
            raise SchemaError('coordinates', f"names must be distinct: {list(coords)}")
        clash = set(coords) & set(params)
        if clash:
            raise SchemaError('parameters', f"names clash with coordinates: {sorted(clash)}")
        if len(metric) != n or any(len(row) != n for row in metric):
            raise SchemaError('metric', f"must be a {n}x{n} matrix")
        if len(flow) != n:
            raise SchemaError('flow', f"must have {n} components, got {len(flow)}")

        def parse(text: str, component: Tuple[int, ...]) -> Expr:
            if not isinstance(text, str):
                raise SchemaError(f'component {component}', "expression must be a string")
            try:
                return parse_expression(text, coords, list(params))
            except (ExpressionSyntaxError, UnknownSymbol) as e:
                raise e.with_component(component) from None

        rows = [[None] * n for _ in range(n)]
        for mu in range(n):
            for nu in range(mu, n):
                rows[mu][nu] = parse(metric[mu][nu], (mu, nu))
                if nu != mu:
                    lower = metric[nu][mu]
                    if lower not in (None, "") and lower.strip() != metric[mu][nu].strip():
                        raise SchemaError(
                            'metric',
                            f"entry ({nu},{mu}) {lower!r} differs from ({mu},{nu}) "
                            f"{metric[mu][nu]!r}",
                        )
                    rows[nu][mu] = rows[mu][nu]
        flow_exprs = tuple(parse(text, (mu,)) for mu, text in enumerate(flow))

        box = None
        if domain is not None:
            validate_box(domain[0], domain[1], n)
            box = (tuple(float(v) for v in domain[0]), tuple(float(v) for v in domain[1]))

        logger.debug(f"Parsed scene {name} with n={n}, params={sorted(params)}")
        return cls(coords, tuple(tuple(r) for r in rows), flow_exprs, params,
                   None if kappa is None else float(kappa), box, name)

    def with_domain(self, lower: Sequence[float], upper: Sequence[float]) -> "Scene":
        validate_box(lower, upper, self.n)
        return Scene(self.coords, self.metric, self.flow, self.params, self.model_kappa,
                     (tuple(map(float, lower)), tuple(map(float, upper))), self.name)

    def metric_texts(self) -> Tuple[Tuple[str, ...], ...]:
        return tuple(tuple(to_text(e) for e in row) for row in self.metric)

    def flow_texts(self) -> Tuple[str, ...]:
        return tuple(to_text(e) for e in self.flow)

    def metric_jet(self, point: Sequence[float]) -> Jet:
        """Second-order jet of the metric matrix, derivative axes last."""
        x = validate_point(point, self.n)
        n = self.n
        value = np.zeros((n, n))
        gradient = np.zeros((n, n, n))
        hessian = np.zeros((n, n, n, n))
        for mu in range(n):
            for nu in range(mu, n):
                jet = eval_jet2(self.metric[mu][nu], x, self.params)
                for a, b in {(mu, nu), (nu, mu)}:
                    value[a, b] = jet.value
                    gradient[a, b] = jet.gradient
                    hessian[a, b] = jet.hessian
        return Jet(value, gradient, hessian)

    def flow_jet(self, point: Sequence[float]) -> Jet:
        x = validate_point(point, self.n)
        jets = [eval_jet2(expr, x, self.params) for expr in self.flow]
        return Jet(np.array([j.value for j in jets]),
                   np.stack([j.gradient for j in jets]),
                   np.stack([j.hessian for j in jets]))

    def metric_value(self, point: Sequence[float]) -> np.ndarray:
        x = validate_point(point, self.n)
        g = np.zeros((self.n, self.n))
        for mu in range(self.n):
            for nu in range(mu, self.n):
                g[mu, nu] = g[nu, mu] = evaluate(self.metric[mu][nu], x, self.params)
        return g

    def flow_value(self, point: Sequence[float]) -> np.ndarray:
        x = validate_point(point, self.n)
        return np.array([evaluate(expr, x, self.params) for expr in self.flow])

    def flow_norm(self, point: Sequence[float]) -> float:
        """g(V, V) at a point."""
        v = self.flow_value(point)
        return float(v @ self.metric_value(point) @ v)

    def digest(self) -> Dict[str, object]:
        """Serializable description used in report headers."""
        return {
            'name': self.name,
            'dimension': self.n,
            'coordinates': list(self.coords),
            'metric': [list(row) for row in self.metric_texts()],
            'flow': list(self.flow_texts()),
            'parameters': dict(sorted(self.params.items())),
            'kappa': self.model_kappa,
        }
