"""Runs groups of identity checks over a sample set."""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from ..frames.adapted_frame import FrameField
from ..geometry.scene import Scene
from ..geometry.verdict import Verdict
from ..utils.config import DEFAULT_TOLERANCES, Tolerances
from ..utils.errors import HypothesisUnmet, ModeUnavailable, NumericalError
from .base_identity import BaseIdentity, HomogeneousIdentity, IdentityResult
from .curvature import BaseCurvatureIdentity, MixedCurvatureIdentity, SectionalDefectIdentity
from .kinematic import AccelerationGradientIdentity, VorticityTransportIdentity
from .structural import (
    FirstStructuralIdentity, LambdaRelationIdentity, SpatialLieDerivativeIdentity,
)

logger = logging.getLogger(__name__)

IDENTITIES = {
    cls.name: cls for cls in (
        FirstStructuralIdentity, LambdaRelationIdentity, SpatialLieDerivativeIdentity,
        VorticityTransportIdentity, AccelerationGradientIdentity,
        BaseCurvatureIdentity, SectionalDefectIdentity, MixedCurvatureIdentity,
    )
}

SUITES = {
    'structural': ('first-structural', 'lambda-relation', 'spatial-lie-derivative'),
    'derivatives': ('vorticity-transport', 'acceleration-gradient'),
    'curvature': ('base-curvature', 'sectional-defect', 'mixed-curvature'),
}
SUITES['all'] = SUITES['structural'] + SUITES['derivatives'] + SUITES['curvature']


def identity_forms() -> Dict[str, str]:
    """The asserted form of every identity, for report headers."""
    return {name: cls.form for name, cls in IDENTITIES.items()}


@dataclass(frozen=True)
class SkippedCheck:
    identity: str
    point: List[float]
    reason: str

    def to_dict(self) -> Dict[str, Any]:
        return {'identity': self.identity, 'point': self.point, 'reason': self.reason}


@dataclass
class SuiteOutcome:
    suite: str
    results: List[IdentityResult] = field(default_factory=list)
    skipped: List[SkippedCheck] = field(default_factory=list)
    excluded: List[Dict[str, Any]] = field(default_factory=list)

    def verdicts(self, tol: float) -> List[Verdict]:
        """One verdict per identity over its asserted results."""
        verdicts = []
        for name in SUITES[self.suite]:
            asserted = [r for r in self.results if r.name == name and r.asserted]
            if asserted:
                verdicts.append(Verdict.from_residuals(
                    name, [r.residual for r in asserted], [r.point for r in asserted], tol
                ))
        return verdicts

    def all_passed(self, tol: float) -> bool:
        return all(v.passed for v in self.verdicts(tol))

    def to_frame(self) -> pd.DataFrame:
        rows = [{'identity': r.name, 'residual': r.residual, 'asserted': r.asserted,
                 'point': tuple(round(x, 6) for x in r.point)} for r in self.results]
        return pd.DataFrame(rows, columns=['identity', 'residual', 'asserted', 'point'])

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'results': [r.to_dict() for r in self.results],
            'skipped': [s.to_dict() for s in self.skipped],
            'excluded': self.excluded,
        }


def build_identities(suite: str = 'all', tolerances: Optional[Tolerances] = None,
                     kappa: Optional[float] = None) -> List[BaseIdentity]:
    if suite not in SUITES:
        raise ValueError(f"Unknown suite {suite!r}; choose from {sorted(SUITES)}")
    identities = []
    for name in SUITES[suite]:
        cls = IDENTITIES[name]
        if issubclass(cls, HomogeneousIdentity):
            identities.append(cls(tolerances, kappa=kappa))
        else:
            identities.append(cls(tolerances))
    return identities


def run_suite_on_fields(fields: Sequence[FrameField], suite: str = 'all',
                        tolerances: Optional[Tolerances] = None,
                        kappa: Optional[float] = None) -> SuiteOutcome:
    outcome = SuiteOutcome(suite)
    identities = build_identities(suite, tolerances, kappa)
    for f in fields:
        point = [float(x) for x in f.point]
        for identity in identities:
            try:
                outcome.results.append(identity.evaluate(f))
            except (HypothesisUnmet, ModeUnavailable) as e:
                logger.debug(f"Skipping {identity.name} at {point}: {e}")
                outcome.skipped.append(SkippedCheck(identity.name, point, str(e)))
    return outcome


def run_identity_suite(scene: Scene, points: Sequence[Sequence[float]], suite: str = 'all',
                       tolerances: Optional[Tolerances] = None,
                       kappa: Optional[float] = None) -> SuiteOutcome:
    """Evaluate a suite at every point; points where the frame fails are excluded."""
    tolerances = tolerances or DEFAULT_TOLERANCES
    fields, excluded = [], []
    for i, p in enumerate(points):
        try:
            fields.append(FrameField(scene, p, tolerances))
        except NumericalError as e:
            logger.warning(f"Excluding point {i} from the {suite} suite: {e}")
            excluded.append({'index': i, 'reason': str(e)})
    outcome = run_suite_on_fields(fields, suite, tolerances, kappa)
    outcome.excluded = excluded
    logger.info(f"{suite} suite on {scene.name}: {len(outcome.results)} checks, "
                f"{len(outcome.skipped)} skipped, {len(excluded)} points excluded")
    return outcome
