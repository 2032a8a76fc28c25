"""Direct Killing test: the Lie derivative of the metric along the flow."""
import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from ..utils.config import DEFAULT_TOLERANCES
from .scene import Scene
from .verdict import Verdict

logger = logging.getLogger(__name__)

KILLING_CRITERION = "killing-direct"


def _lie_derivative_terms(scene: Scene, point: Sequence[float]
                          ) -> Tuple[np.ndarray, np.ndarray]:
    g_jet = scene.metric_jet(point)
    v_jet = scene.flow_jet(point)
    g, dg = g_jet.value, g_jet.gradient  # dg[mu, nu, rho] = d_rho g_{mu nu}
    v, dv = v_jet.value, v_jet.gradient  # dv[rho, mu] = d_mu V^rho
    transport = np.einsum('r,mnr->mn', v, dg)
    twist = np.einsum('rn,rm->mn', g, dv)
    return transport, twist


def lie_derivative_metric(scene: Scene, point: Sequence[float]) -> np.ndarray:
    """(L_V g)_{mu nu} = V^rho d_rho g_{mu nu} + g_{rho nu} d_mu V^rho + g_{mu rho} d_nu V^rho."""
    transport, twist = _lie_derivative_terms(scene, point)
    return transport + (twist + twist.T)


def killing_residual(scene: Scene, point: Sequence[float]) -> float:
    """Scale-relative max entry of L_V g at a point."""
    transport, twist = _lie_derivative_terms(scene, point)
    lie = transport + (twist + twist.T)
    scale = 1.0 + max(np.max(np.abs(transport)), np.max(np.abs(twist)))
    return float(np.max(np.abs(lie)) / scale)


def killing_verdict(scene: Scene, points: Sequence[Sequence[float]],
                    tol: Optional[float] = None) -> Verdict:
    """Pass iff the Lie derivative of g vanishes at every sampled point."""
    tol = DEFAULT_TOLERANCES.verdict if tol is None else tol
    residuals = [killing_residual(scene, p) for p in points]
    verdict = Verdict.from_residuals(KILLING_CRITERION, residuals, points, tol)
    logger.info(f"Killing check on {scene.name}: {verdict.label()} "
                f"(worst {verdict.worst_residual:.3e})")
    return verdict
