"""End-to-end check that a rotational rigid flow in a homogeneous spacetime is isometric."""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..frames.adapted_frame import FrameField
from ..frames.derivatives import d_derivatives
from ..geometry.killing import killing_verdict
from ..geometry.metric import constant_curvature_residual, fit_kappa
from ..geometry.scene import Scene
from ..geometry.verdict import Verdict
from ..utils.config import DEFAULT_TOLERANCES, Tolerances
from ..utils.errors import DomainError, NumericalError, SchemaError
from .verdicts import RigidityCriterion, timelike_domain_check, vorticity_residual

logger = logging.getLogger(__name__)

THEOREM_INSTANTIATED = "theorem-instantiated"
HYPOTHESIS_UNMET = "hypothesis-unmet"
COUNTEREXAMPLE_CANDIDATE = "counterexample-candidate"


@dataclass(frozen=True)
class PointTheoremRecord:
    index: int
    rigid: Verdict
    rotational: bool
    M_dot_zero: Verdict
    K_dot_zero: Verdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            'index': self.index,
            'rigid': self.rigid.to_dict(),
            'rotational': self.rotational,
            'M_dot_zero': self.M_dot_zero.to_dict(),
            'K_dot_zero': self.K_dot_zero.to_dict(),
        }


@dataclass
class TheoremReport:
    homogeneity: Optional[Verdict]
    kappa: Optional[float]
    kappa_declared: bool
    points: List[PointTheoremRecord]
    killing_direct: Optional[Verdict]
    conclusion: str
    excluded: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def all_rigid(self) -> bool:
        return bool(self.points) and all(p.rigid.passed for p in self.points)

    @property
    def all_rotational(self) -> bool:
        return bool(self.points) and all(p.rotational for p in self.points)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'homogeneity': None if self.homogeneity is None else self.homogeneity.to_dict(),
            'kappa': self.kappa,
            'kappa_declared': self.kappa_declared,
            'points': [p.to_dict() for p in self.points],
            'killing_direct': None if self.killing_direct is None else self.killing_direct.to_dict(),
            'conclusion': self.conclusion,
            'excluded': self.excluded,
        }


def decide_conclusion(homogeneity: Optional[Verdict], rigid: bool, rotational: bool,
                      killing: Optional[Verdict]) -> str:
    if homogeneity is None or killing is None:
        return HYPOTHESIS_UNMET
    if homogeneity.passed and rigid and rotational:
        return THEOREM_INSTANTIATED if killing.passed else COUNTEREXAMPLE_CANDIDATE
    return HYPOTHESIS_UNMET


def homogeneity_verdict(fields: Sequence[FrameField], kappa: Optional[float],
                        tol: float) -> Tuple[Verdict, float, bool]:
    """Constant-curvature verdict with the declared kappa, or a fitted one."""
    samples = [(f.riemann, f.metric) for f in fields]
    declared = kappa is not None
    if not declared:
        kappa = fit_kappa(samples)
    residuals = [constant_curvature_residual(rs, ms, kappa) for rs, ms in samples]
    verdict = Verdict.from_residuals("homogeneity", residuals, [f.point for f in fields], tol)
    return verdict, kappa, declared


def usable_fields(scene: Scene, points: np.ndarray, tolerances: Tolerances
                  ) -> Tuple[List[FrameField], List[int], List[Dict[str, Any]]]:
    """Frame fields at the timelike points; the rest are returned as exclusions."""
    timelike = timelike_domain_check(scene, points, tolerances)
    excluded: List[Dict[str, Any]] = []
    fields: List[FrameField] = []
    indices: List[int] = []
    for i, p in enumerate(timelike.points):
        if timelike.flagged[i]:
            reason = timelike.errors[i] or f"not timelike: g(V,V)={timelike.g_vv[i]!r}"
            excluded.append({'index': i, 'point': p.tolist(), 'reason': reason})
            continue
        try:
            fields.append(FrameField(scene, p, tolerances))
            indices.append(i)
        except (NumericalError, DomainError) as e:
            logger.warning(f"Excluding point {i}: {e}")
            excluded.append({'index': i, 'point': p.tolist(), 'reason': str(e)})
    return fields, indices, excluded


def theorem_report_of(scene: Scene, fields: Sequence[FrameField], indices: Sequence[int],
                      tolerances: Tolerances,
                      excluded: Optional[List[Dict[str, Any]]] = None) -> TheoremReport:
    excluded = list(excluded or [])
    if not fields:
        logger.warning(f"No usable points for {scene.name}")
        return TheoremReport(None, scene.model_kappa, scene.model_kappa is not None, [],
                             None, HYPOTHESIS_UNMET, excluded)

    homogeneity, kappa, declared = homogeneity_verdict(
        fields, scene.model_kappa, tolerances.homogeneity
    )

    rigidity = RigidityCriterion()
    records = []
    for i, f in zip(indices, fields):
        ds = d_derivatives(f)
        records.append(PointTheoremRecord(
            index=i,
            rigid=Verdict.from_residuals(rigidity.name, [rigidity.measure(f)], [f.point],
                                         tolerances.verdict),
            rotational=vorticity_residual(f) > tolerances.rotation,
            M_dot_zero=Verdict.from_residuals(
                "M_dot", [float(np.max(np.abs(ds.M_dot), initial=0.0))], [f.point],
                tolerances.verdict),
            K_dot_zero=Verdict.from_residuals(
                "K_dot", [float(np.max(np.abs(ds.K_dot), initial=0.0))], [f.point],
                tolerances.verdict),
        ))

    killing = killing_verdict(scene, [f.point for f in fields], tolerances.verdict)
    report = TheoremReport(homogeneity, kappa, declared, records, killing, "", excluded)
    report.conclusion = decide_conclusion(homogeneity, report.all_rigid,
                                          report.all_rotational, killing)
    if report.conclusion == COUNTEREXAMPLE_CANDIDATE:
        logger.warning(f"Rotational rigid flow on {scene.name} failed the Killing check")
    logger.info(f"Theorem check on {scene.name}: {report.conclusion}")
    return report


def herglotz_noether_report(scene: Scene, plan: Any,
                            tolerances: Optional[Tolerances] = None) -> TheoremReport:
    """Homogeneity, rigidity, rotation and Killing checks with the resulting conclusion.

    `plan` is a sample plan (anything with a points() method) or a point array.
    Non-timelike points and points where the frame fails are excluded.
    """
    tolerances = tolerances or DEFAULT_TOLERANCES
    points = plan.points() if hasattr(plan, 'points') else np.asarray(plan, dtype=float)
    if len(points) == 0:
        raise SchemaError('points', "sample plan is empty")
    fields, indices, excluded = usable_fields(scene, points, tolerances)
    return theorem_report_of(scene, fields, indices, tolerances, excluded)
