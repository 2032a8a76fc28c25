from .base_identity import BaseIdentity, HomogeneousIdentity, IdentityResult
from .structural import (
    FirstStructuralIdentity, LambdaRelationIdentity, SpatialLieDerivativeIdentity,
    check_first_structural, check_lambda_relation, check_spatial_lie_derivative,
)
from .kinematic import (
    VorticityTransportIdentity, AccelerationGradientIdentity,
    check_vorticity_transport, check_acceleration_gradient,
)
from .curvature import (
    BaseCurvatureIdentity, SectionalDefectIdentity, MixedCurvatureIdentity, sectional_defect,
    check_base_curvature, check_sectional_defect, check_mixed_curvature,
)
from .suite import (
    IDENTITIES, SUITES, SkippedCheck, SuiteOutcome, identity_forms,
    build_identities, run_suite_on_fields, run_identity_suite,
)

__all__ = [
    'BaseIdentity', 'HomogeneousIdentity', 'IdentityResult',
    'FirstStructuralIdentity', 'LambdaRelationIdentity', 'SpatialLieDerivativeIdentity',
    'check_first_structural', 'check_lambda_relation', 'check_spatial_lie_derivative',
    'VorticityTransportIdentity', 'AccelerationGradientIdentity',
    'check_vorticity_transport', 'check_acceleration_gradient',
    'BaseCurvatureIdentity', 'SectionalDefectIdentity', 'MixedCurvatureIdentity',
    'sectional_defect', 'check_base_curvature', 'check_sectional_defect', 'check_mixed_curvature',
    'IDENTITIES', 'SUITES', 'SkippedCheck', 'SuiteOutcome', 'identity_forms',
    'build_identities', 'run_suite_on_fields', 'run_identity_suite',
]
