"""Rigidity, rotation and isometry criteria evaluated in the adapted frame."""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from ..frames.adapted_frame import FrameField
from ..frames.derivatives import d_derivatives
from ..geometry.scene import Scene
from ..geometry.verdict import Verdict
from ..utils.config import DEFAULT_TOLERANCES, Tolerances
from ..utils.errors import PreconditionViolated, RigidFlowError, SchemaError

logger = logging.getLogger(__name__)


class BaseCriterion(ABC):
    """A per-point frame residual reduced to a verdict by its maximum."""

    name = "criterion"

    @abstractmethod
    def measure(self, field: FrameField) -> float:
        """Residual of the criterion at one point."""
        pass

    def verdict(self, fields: Sequence[FrameField], tol: float) -> Verdict:
        residuals = [self.measure(f) for f in fields]
        verdict = Verdict.from_residuals(self.name, residuals, [f.point for f in fields], tol)
        logger.info(f"{self.name}: {verdict.label()} (worst {verdict.worst_residual:.3e})")
        return verdict


class RigidityCriterion(BaseCriterion):
    """Born rigidity: symmetric part of M vanishes (no shear, no expansion)."""

    name = "firstprop"

    def measure(self, field: FrameField) -> float:
        M = field.sample.M
        return float(np.max(np.abs(0.5 * (M + M.T)), initial=0.0))


class ExactAccelerationCriterion(BaseCriterion):
    """K_{[i;j]} = 0 and K_dot = 0."""

    name = "rfif"

    def measure(self, field: FrameField) -> float:
        ds = d_derivatives(field)
        curl = 0.5 * (ds.K_cd - ds.K_cd.T)
        return float(max(np.max(np.abs(curl), initial=0.0),
                         np.max(np.abs(ds.K_dot), initial=0.0)))


class SteadyRotationCriterion(BaseCriterion):
    """M_dot = 0 and K_dot = 0."""

    name = "finalc"

    def measure(self, field: FrameField) -> float:
        ds = d_derivatives(field)
        return float(max(np.max(np.abs(ds.M_dot), initial=0.0),
                         np.max(np.abs(ds.K_dot), initial=0.0)))


def vorticity_residual(field: FrameField) -> float:
    M = field.sample.M
    return float(np.max(np.abs(0.5 * (M - M.T)), initial=0.0))


@dataclass(frozen=True)
class IsometryCriteria:
    rigidity: Verdict
    exact_acceleration: Verdict
    steady_rotation: Verdict

    def as_dict(self) -> Dict[str, Verdict]:
        return {v.criterion: v for v in (self.exact_acceleration, self.steady_rotation)}


def _fields(scene: Scene, points: Sequence[Sequence[float]],
            tolerances: Optional[Tolerances]) -> List[FrameField]:
    if len(points) == 0:
        raise SchemaError('points', "sample set is empty")
    return [FrameField(scene, p, tolerances) for p in points]


def rigidity_verdict(scene: Scene, points: Sequence[Sequence[float]],
                     tol: Optional[float] = None,
                     tolerances: Optional[Tolerances] = None) -> Verdict:
    """Pass iff max |M_(ij)| < tol over the sample set."""
    tol = (tolerances or DEFAULT_TOLERANCES).verdict if tol is None else tol
    return RigidityCriterion().verdict(_fields(scene, points, tolerances), tol)


def rotational_predicate(scene: Scene, point: Sequence[float],
                         tol_rot: Optional[float] = None,
                         tolerances: Optional[Tolerances] = None) -> bool:
    """True iff the flow rotates at the point: max |M_[ij]| > tol_rot."""
    tol_rot = (tolerances or DEFAULT_TOLERANCES).rotation if tol_rot is None else tol_rot
    return vorticity_residual(FrameField(scene, point, tolerances)) > tol_rot


def isometry_criteria_of(fields: Sequence[FrameField], tol: float) -> IsometryCriteria:
    rigidity = RigidityCriterion().verdict(fields, tol)
    if not rigidity.passed:
        raise PreconditionViolated(
            f"Isometry criteria need a rigid flow; rigidity residual "
            f"{rigidity.worst_residual:.3e} at {rigidity.worst_point}",
            rigidity,
        )
    return IsometryCriteria(rigidity, ExactAccelerationCriterion().verdict(fields, tol),
                            SteadyRotationCriterion().verdict(fields, tol))


def isometry_via_criteria(scene: Scene, points: Sequence[Sequence[float]],
                          tol: Optional[float] = None,
                          tolerances: Optional[Tolerances] = None) -> IsometryCriteria:
    """Frame criteria for a rigid flow to be isometric."""
    tol = (tolerances or DEFAULT_TOLERANCES).verdict if tol is None else tol
    return isometry_criteria_of(_fields(scene, points, tolerances), tol)


@dataclass(frozen=True)
class TimelikeReport:
    points: np.ndarray
    g_vv: np.ndarray
    flagged: np.ndarray
    errors: List[Optional[str]]

    @property
    def timelike(self) -> np.ndarray:
        return ~self.flagged

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.points, columns=[f"x{i}" for i in range(self.points.shape[1])])
        frame['g_vv'] = self.g_vv
        frame['timelike'] = ~self.flagged
        frame['error'] = self.errors
        return frame


def timelike_domain_check(scene: Scene, points: Sequence[Sequence[float]],
                          tolerances: Optional[Tolerances] = None) -> TimelikeReport:
    """g(V, V) per point; flags points where the flow is not safely timelike."""
    threshold = (tolerances or DEFAULT_TOLERANCES).timelike
    points = np.asarray(points, dtype=float).reshape(len(points), scene.n)
    values, flagged, errors = [], [], []
    for p in points:
        try:
            value = scene.flow_norm(p)
            errors.append(None)
        except RigidFlowError as e:
            value = float('nan')
            errors.append(str(e))
        values.append(value)
        flagged.append(not value < -threshold)
    report = TimelikeReport(points, np.array(values), np.array(flagged, dtype=bool), errors)
    if report.flagged.any():
        logger.warning(f"{int(report.flagged.sum())} of {len(points)} points "
                       f"are not timelike for {scene.name}")
    return report
