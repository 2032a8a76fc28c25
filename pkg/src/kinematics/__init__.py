from .decomposition import KinematicInvariants, decompose_m, kinematic_invariants
from .verdicts import (
    BaseCriterion, RigidityCriterion, ExactAccelerationCriterion, SteadyRotationCriterion,
    IsometryCriteria, TimelikeReport, rigidity_verdict, rotational_predicate,
    isometry_via_criteria, isometry_criteria_of, timelike_domain_check, vorticity_residual,
)
from .theorem import (
    TheoremReport, PointTheoremRecord, herglotz_noether_report, decide_conclusion,
    homogeneity_verdict, usable_fields, theorem_report_of,
    THEOREM_INSTANTIATED, HYPOTHESIS_UNMET, COUNTEREXAMPLE_CANDIDATE,
)

__all__ = [
    'KinematicInvariants', 'decompose_m', 'kinematic_invariants',
    'BaseCriterion', 'RigidityCriterion', 'ExactAccelerationCriterion',
    'SteadyRotationCriterion', 'IsometryCriteria', 'TimelikeReport',
    'rigidity_verdict', 'rotational_predicate', 'isometry_via_criteria',
    'isometry_criteria_of', 'timelike_domain_check', 'vorticity_residual',
    'TheoremReport', 'PointTheoremRecord', 'herglotz_noether_report', 'decide_conclusion',
    'homogeneity_verdict', 'usable_fields', 'theorem_report_of',
    'THEOREM_INSTANTIATED', 'HYPOTHESIS_UNMET', 'COUNTEREXAMPLE_CANDIDATE',
]
