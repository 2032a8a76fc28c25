"""Coordinate samples of the metric, its Levi-Civita connection and curvature."""
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import lstsq, lu_factor, lu_solve

from ..expressions.jets import Jet
from ..utils.config import DEFAULT_TOLERANCES, Tolerances
from ..utils.errors import DegenerateMetric
from .scene import Scene

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MetricSample:
    """g, its inverse and coordinate derivatives at a point.

    dg[a, mu, nu] = d_a g_{mu nu}; ddg[a, b, mu, nu] = d_a d_b g_{mu nu}.
    """
    point: np.ndarray
    g: np.ndarray
    g_inv: np.ndarray
    dg: np.ndarray
    ddg: np.ndarray
    det: float


@dataclass(frozen=True)
class ConnectionSample:
    """Gamma[mu, nu, rho] = Gamma^mu_{nu rho}; dGamma[a, mu, nu, rho] = d_a Gamma^mu_{nu rho}."""
    gamma: np.ndarray
    dgamma: np.ndarray

    def as_jet(self) -> Jet:
        return Jet(self.gamma, np.moveaxis(self.dgamma, 0, -1))


@dataclass(frozen=True)
class RiemannSample:
    """R[mu, nu, rho, sigma] = R^mu_{nu rho sigma} in coordinates."""
    R: np.ndarray

    def lowered(self, ms: MetricSample) -> np.ndarray:
        return np.einsum('ml,lnrs->mnrs', ms.g, self.R)


def metric_sample_from_jet(point: Sequence[float], g_jet: Jet,
                           tolerances: Optional[Tolerances] = None) -> MetricSample:
    tolerances = tolerances or DEFAULT_TOLERANCES
    g = g_jet.value
    n = g.shape[0]
    lu, piv = lu_factor(g, check_finite=True)
    swaps = int(np.count_nonzero(piv != np.arange(n)))
    det = float(np.prod(np.diag(lu)) * (-1) ** swaps)
    if abs(det) <= tolerances.nondegenerate:
        raise DegenerateMetric(point, det)
    g_inv = lu_solve((lu, piv), np.eye(n))
    g_inv = 0.5 * (g_inv + g_inv.T)
    return MetricSample(
        point=np.asarray(point, dtype=float),
        g=g,
        g_inv=g_inv,
        dg=np.moveaxis(g_jet.gradient, -1, 0),
        ddg=np.moveaxis(g_jet.hessian, (-2, -1), (0, 1)),
        det=det,
    )


def sample_metric(scene: Scene, point: Sequence[float],
                  tolerances: Optional[Tolerances] = None) -> MetricSample:
    """Evaluate the metric and its first two derivatives at a point."""
    return metric_sample_from_jet(point, scene.metric_jet(point), tolerances)


def christoffel(ms: MetricSample) -> ConnectionSample:
    """Levi-Civita symbols and their first derivatives."""
    dg, ddg, g_inv = ms.dg, ms.ddg, ms.g_inv

    # lowered[s, n, r] = 1/2 (d_n g_{s r} + d_r g_{s n} - d_s g_{n r})
    lowered = 0.5 * (np.einsum('nsr->snr', dg) + np.einsum('rsn->snr', dg) - dg)
    gamma = np.einsum('ms,snr->mnr', g_inv, lowered)
    gamma = 0.5 * (gamma + np.swapaxes(gamma, 1, 2))

    d_lowered = 0.5 * (np.einsum('ansr->asnr', ddg) + np.einsum('arsn->asnr', ddg)
                       - ddg)
    d_ginv = -np.einsum('mp,apq,qs->ams', g_inv, dg, g_inv)
    dgamma = (np.einsum('ams,snr->amnr', d_ginv, lowered)
              + np.einsum('ms,asnr->amnr', g_inv, d_lowered))
    dgamma = 0.5 * (dgamma + np.swapaxes(dgamma, 2, 3))
    return ConnectionSample(gamma, dgamma)


def riemann(cs: ConnectionSample) -> RiemannSample:
    """R^mu_{nu rho sigma} = d_rho Gamma^mu_{nu sigma} - d_sigma Gamma^mu_{nu rho} + ..."""
    half = (np.einsum('rmns->mnrs', cs.dgamma)
            + np.einsum('mlr,lns->mnrs', cs.gamma, cs.gamma))
    return RiemannSample(half - np.swapaxes(half, 2, 3))


def metric_wedge(g: np.ndarray) -> np.ndarray:
    """(g wedge g)_{mu nu rho sigma} = g_{mu rho} g_{nu sigma} - g_{mu sigma} g_{nu rho}."""
    return np.einsum('mr,ns->mnrs', g, g) - np.einsum('ms,nr->mnrs', g, g)


def constant_curvature_residual(rs: RiemannSample, ms: MetricSample, kappa: float) -> float:
    """Scale-relative max residual of R_{mu nu rho sigma} = kappa (g wedge g)."""
    lowered = rs.lowered(ms)
    residual = lowered - kappa * metric_wedge(ms.g)
    return float(np.max(np.abs(residual)) / (1.0 + np.max(np.abs(lowered))))


def fit_kappa(samples: Iterable[Tuple[RiemannSample, MetricSample]]) -> float:
    """Least-squares kappa over all components of all samples."""
    columns, targets = [], []
    for rs, ms in samples:
        columns.append(metric_wedge(ms.g).ravel())
        targets.append(rs.lowered(ms).ravel())
    if not columns:
        raise ValueError("fit_kappa needs at least one sample")
    design = np.concatenate(columns)[:, None]
    solution, _, _, _ = lstsq(design, np.concatenate(targets))
    kappa = float(solution[0])
    logger.debug(f"Fitted kappa={kappa:.6g} over {len(columns)} samples")
    return kappa


def curvature_at(scene: Scene, point: Sequence[float],
                 tolerances: Optional[Tolerances] = None
                 ) -> Tuple[MetricSample, ConnectionSample, RiemannSample]:
    """Metric, connection and Riemann samples at a point."""
    ms = sample_metric(scene, point, tolerances)
    cs = christoffel(ms)
    return ms, cs, riemann(cs)
