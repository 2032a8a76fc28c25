import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from ..frames.adapted_frame import FrameField
from ..frames.derivatives import d_derivatives
from ..geometry.killing import killing_verdict
from ..geometry.scene import Scene
from ..geometry.verdict import Verdict
from ..identities.curvature import sectional_defect
from ..identities.suite import identity_forms, run_suite_on_fields
from ..kinematics.decomposition import kinematic_invariants
from ..kinematics.theorem import theorem_report_of, usable_fields
from ..kinematics.verdicts import (
    RigidityCriterion, isometry_criteria_of, vorticity_residual,
)
from ..utils.config import DEFAULT_TOLERANCES, Tolerances
from ..utils.errors import NumericalError, PreconditionViolated
from .report import CONVENTIONS, Report
from .sampling import SamplePlan

logger = logging.getLogger(__name__)

STEPS = ('kinematics', 'verdicts', 'identities', 'theorem')
COMMAND_STEPS = {
    'analyze': STEPS,
    'verify': ('identities',),
    'theorem': ('theorem',),
}


class AnalysisEngine:
    """Runs the frame pipeline over a sample plan and assembles the report."""

    def __init__(self, scene: Scene, tolerances: Optional[Tolerances] = None,
                 suite: str = 'all'):
        self.scene = scene
        self.tolerances = tolerances or DEFAULT_TOLERANCES
        self.suite = suite

        self.fields: List[FrameField] = []
        self.indices: List[int] = []
        self.report: Optional[Report] = None

    def run(self, plan: SamplePlan, command: str = 'analyze') -> Report:
        steps = COMMAND_STEPS[command]
        logger.info(f"Starting {command} of {self.scene.name} on {plan.kind}:{plan.size}")

        # Step 1: sample and drop unusable points
        points = plan.points()
        self.fields, self.indices, excluded = usable_fields(self.scene, points, self.tolerances)
        if not self.fields:
            raise NumericalError(f"no usable points for {self.scene.name}: "
                                 f"all {len(points)} were excluded")
        logger.info(f"{len(self.fields)} usable points, {len(excluded)} excluded")

        conventions = dict(CONVENTIONS)
        conventions.update({f"identity {k}": v for k, v in identity_forms().items()})
        report = Report(command, self.scene.digest(), plan.to_dict(),
                        self.tolerances.to_dict(), conventions, excluded=excluded)

        # Step 2: per-point kinematics
        if 'kinematics' in steps:
            logger.info("Computing kinematics...")
            report.points = [self._point_record(i, f) for i, f in zip(self.indices, self.fields)]

        # Step 3: rigidity, isometry criteria and the direct Killing check
        if 'verdicts' in steps:
            logger.info("Evaluating verdicts...")
            report.verdicts, notes = self._verdicts()
            report.notes.extend(notes)

        # Step 4: identity suite
        if 'identities' in steps:
            logger.info(f"Running the {self.suite} identity suite...")
            outcome = run_suite_on_fields(self.fields, self.suite, self.tolerances)
            report.identities = [r.to_dict() for r in outcome.results]
            report.identity_verdicts = outcome.verdicts(self.tolerances.identity)
            report.skipped = [s.to_dict() for s in outcome.skipped]

        # Step 5: theorem conclusion
        if 'theorem' in steps:
            logger.info("Checking the rigid-rotation theorem...")
            theorem = theorem_report_of(self.scene, self.fields, self.indices,
                                        self.tolerances, excluded)
            report.theorem = theorem.to_dict()
            report.conclusion = theorem.conclusion

        self.report = report
        logger.info(f"{command} of {self.scene.name} completed")
        return report

    def _point_record(self, index: int, f: FrameField) -> Dict[str, Any]:
        fs = f.sample
        ds = d_derivatives(f)
        invariants = kinematic_invariants(fs)
        rigidity = RigidityCriterion().measure(f)
        vorticity = vorticity_residual(f)
        record = {
            'index': index,
            'point': [float(x) for x in f.point],
            'rigidity_residual': rigidity,
            'vorticity_residual': vorticity,
            'rotational': bool(vorticity > self.tolerances.rotation),
            'K_dot': [float(x) for x in ds.K_dot],
            'K_naive': [float(x) for x in ds.K_naive],
            'M_dot_norm': float(np.max(np.abs(ds.M_dot), initial=0.0)),
            'sectional_defect': (float(np.max(np.abs(sectional_defect(f)), initial=0.0))
                                 if rigidity < self.tolerances.verdict else None),
            'skipped_candidates': list(fs.skipped),
        }
        record.update(invariants.to_dict())
        return record

    def _verdicts(self) -> Tuple[List[Verdict], List[str]]:
        tol = self.tolerances.verdict
        notes = []
        try:
            criteria = isometry_criteria_of(self.fields, tol)
            verdicts = [criteria.rigidity, *criteria.as_dict().values()]
        except PreconditionViolated as e:
            verdicts = [e.verdict]
            notes.append(f"isometry criteria not evaluated: {e}")
        verdicts.append(killing_verdict(self.scene, [f.point for f in self.fields], tol))
        return verdicts, notes

    def get_results_summary(self) -> pd.DataFrame:
        """Per-point summary of the last run."""
        if self.report is None:
            return pd.DataFrame()
        return self.report.to_frame()


def run_analysis(scene: Scene, plan: SamplePlan, tolerances: Optional[Tolerances] = None,
                 command: str = 'analyze', suite: str = 'all') -> Report:
    """Run the pipeline for one command and return its report."""
    return AnalysisEngine(scene, tolerances, suite).run(plan, command)
