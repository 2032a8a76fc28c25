from .base_model import (
    BaseMetricFamily, BaseFlowFamily, ModelDescriptor, ParameterSpec, ExpectedVerdicts,
)
from .metrics import (
    METRICS, MinkowskiMetric, ConstantCurvatureMetric, DeSitterMetric, AntiDeSitterMetric,
    EinsteinStaticMetric, FermiRigidMetric,
)
from .flows import (
    FLOWS, StaticFlow, RotatingFlow, HelicalFlow, PerturbedRotatingFlow,
    BoostFlow, MilneFlow, FermiRigidFlow,
)
from .catalog import build_model, list_models, expected_verdicts, recommended_domain

__all__ = [
    'BaseMetricFamily', 'BaseFlowFamily', 'ModelDescriptor', 'ParameterSpec', 'ExpectedVerdicts',
    'METRICS', 'MinkowskiMetric', 'ConstantCurvatureMetric', 'DeSitterMetric',
    'AntiDeSitterMetric', 'EinsteinStaticMetric', 'FermiRigidMetric',
    'FLOWS', 'StaticFlow', 'RotatingFlow', 'HelicalFlow', 'PerturbedRotatingFlow',
    'BoostFlow', 'MilneFlow', 'FermiRigidFlow',
    'build_model', 'list_models', 'expected_verdicts', 'recommended_domain',
]
