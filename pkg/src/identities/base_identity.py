from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence
import logging

import numpy as np

from ..frames.adapted_frame import FrameField
from ..geometry.metric import constant_curvature_residual
from ..geometry.scene import Scene
from ..utils.config import DEFAULT_TOLERANCES, Tolerances
from ..utils.errors import HypothesisUnmet

logger = logging.getLogger(__name__)


@dataclass
class IdentityResult:
    """Residual of one identity at one point, with its signed terms.

    The identity reads sum(terms) = 0; residual is the max-abs of that sum
    divided by scale = 1 + the largest term magnitude.
    """
    name: str
    residual: float
    point: List[float]
    terms: Dict[str, np.ndarray]
    scale: float
    asserted: bool = True
    note: str = ""

    @property
    def components(self) -> np.ndarray:
        return sum(self.terms.values())

    @property
    def details(self) -> Dict[str, float]:
        return {k: float(np.max(np.abs(v), initial=0.0)) for k, v in self.terms.items()}

    def passed(self, tol: float) -> bool:
        return self.residual < tol

    def to_dict(self) -> Dict[str, Any]:
        return {
            'identity': self.name,
            'residual': self.residual,
            'point': self.point,
            'details': dict(sorted(self.details.items())),
            'asserted': self.asserted,
            'note': self.note,
        }


class BaseIdentity(ABC):
    """An identity sum(terms) = 0 between frame quantities at a point."""

    name = "identity"
    form = ""

    def __init__(self, tolerances: Optional[Tolerances] = None):
        self.tolerances = tolerances or DEFAULT_TOLERANCES

    @abstractmethod
    def terms(self, field: FrameField) -> Dict[str, np.ndarray]:
        """Signed terms whose sum vanishes when the identity holds."""
        pass

    def precondition(self, field: FrameField) -> None:
        """Raise HypothesisUnmet or ModeUnavailable when the identity does not apply."""
        return None

    def is_asserted(self, field: FrameField) -> bool:
        """False when the identity is only reported as a diagnostic at this point."""
        return True

    def evaluate(self, field: FrameField) -> IdentityResult:
        self.precondition(field)
        terms = {k: np.asarray(v, dtype=float) for k, v in self.terms(field).items()}
        total = sum(terms.values())
        scale = 1.0 + max(float(np.max(np.abs(v), initial=0.0)) for v in terms.values())
        residual = float(np.max(np.abs(total), initial=0.0)) / scale
        logger.debug(f"{self.name} at {field.point.tolist()}: residual {residual:.3e}")
        return IdentityResult(self.name, residual, [float(x) for x in field.point],
                              terms, scale, asserted=self.is_asserted(field))

    def check(self, scene: Scene, point: Sequence[float],
              field: Optional[FrameField] = None) -> IdentityResult:
        field = field or FrameField(scene, point, self.tolerances)
        return self.evaluate(field)


class HomogeneousIdentity(BaseIdentity):
    """Identity stated for constant-curvature scenes."""

    def __init__(self, tolerances: Optional[Tolerances] = None,
                 kappa: Optional[float] = None):
        super().__init__(tolerances)
        self.kappa = kappa

    def precondition(self, field: FrameField) -> None:
        kappa = self.kappa if self.kappa is not None else field.scene.model_kappa
        if kappa is None:
            raise HypothesisUnmet(f"{self.name} needs a declared constant curvature")
        residual = constant_curvature_residual(field.riemann, field.metric, kappa)
        if residual >= self.tolerances.homogeneity:
            raise HypothesisUnmet(
                f"{self.name}: scene is not of constant curvature {kappa} at "
                f"{field.point.tolist()} (residual {residual:.3e})"
            )
