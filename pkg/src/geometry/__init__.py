from .scene import Scene
from .verdict import Verdict
from .metric import (
    MetricSample, ConnectionSample, RiemannSample,
    sample_metric, metric_sample_from_jet, christoffel, riemann,
    metric_wedge, constant_curvature_residual, fit_kappa, curvature_at,
)
from .killing import lie_derivative_metric, killing_residual, killing_verdict, KILLING_CRITERION

__all__ = [
    'Scene', 'Verdict',
    'MetricSample', 'ConnectionSample', 'RiemannSample',
    'sample_metric', 'metric_sample_from_jet', 'christoffel', 'riemann',
    'metric_wedge', 'constant_curvature_residual', 'fit_kappa', 'curvature_at',
    'lie_derivative_metric', 'killing_residual', 'killing_verdict', 'KILLING_CRITERION',
]
