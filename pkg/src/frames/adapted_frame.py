"""Flow-adapted orthonormal frames.

I_0 is the unit flow vector, V = lambda I_0. The spatial vectors come from
Gram-Schmidt over the coordinate basis in fixed coordinate order, with the
Lorentzian inner product. Everything is computed on second-order jets so the
frame connection Gamma_hat comes out as a first-order jet and directional
derivatives of K, M, A, B are available without finite differences.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..expressions.jets import Jet, contract, directional, stack
from ..geometry.metric import (
    ConnectionSample, MetricSample, RiemannSample, christoffel, metric_sample_from_jet, riemann,
)
from ..geometry.scene import Scene
from ..utils.config import DEFAULT_TOLERANCES, Tolerances
from ..utils.errors import FrameDegenerate, SkipSetUnstable, TimelikeViolation
from ..utils.validators import validate_point

logger = logging.getLogger(__name__)


def minkowski_eta(n: int) -> np.ndarray:
    eta = np.ones(n)
    eta[0] = -1.0
    return eta


@dataclass(frozen=True)
class FrameSample:
    """Adapted frame data at a point.

    frame[:, mu] holds the coordinate components of I_mu, coframe[mu, :] those
    of omega^mu. gamma_hat[mu, nu, rho] = omega^mu(nabla_{I_rho} I_nu). Spatial
    blocks use indices 0..n-2 for I_1..I_{n-1}:
    K[i] = Gamma_hat^i_00, M[i, j] = Gamma_hat^i_0j,
    A[i, j, k] = Gamma_hat^i_jk, B[i, j] = Gamma_hat^i_j0.
    """
    point: np.ndarray
    lam: float
    frame: np.ndarray
    coframe: np.ndarray
    gamma_hat: np.ndarray
    K: np.ndarray
    M: np.ndarray
    A: np.ndarray
    B: np.ndarray
    skipped: Tuple[int, ...] = ()


def _inner(a: Jet, lowered_b: Jet) -> Jet:
    return contract('a,a->', a, lowered_b)


def gram_schmidt(g: Jet, v: Jet, point: Sequence[float],
                 tolerances: Tolerances) -> Tuple[Jet, List[Jet], Tuple[int, ...]]:
    """lambda and the adapted frame vectors as jets, plus skipped candidates."""
    n = g.shape[0]
    gvv = _inner(v, contract('ab,b->a', g, v))
    if float(gvv.value) >= -tolerances.timelike:
        raise TimelikeViolation(point, float(gvv.value))
    lam = (-gvv).sqrt()
    i0 = v * lam.reciprocal()

    eta = minkowski_eta(n)
    vectors = [i0]
    lowered = [contract('ab,b->a', g, i0)]
    skipped = []
    basis = np.eye(n)

    for c in range(n):
        if len(vectors) == n:
            break
        w = Jet.constant(basis[c], n)
        # second pass re-orthogonalizes against roundoff
        for _ in range(2):
            for k, (vec, low) in enumerate(zip(vectors, lowered)):
                w = w - (eta[k] * _inner(w, low)) * vec
        w_low = contract('ab,b->a', g, w)
        norm2 = _inner(w, w_low)
        value = float(norm2.value)

        if value < tolerances.gram_schmidt:
            if norm2.max_abs() >= tolerances.gram_schmidt:
                raise SkipSetUnstable(point, c, value)
            skipped.append(c)
            continue
        if value < tolerances.branch_band:
            raise SkipSetUnstable(point, c, value)

        scale = norm2.sqrt().reciprocal()
        vectors.append(w * scale)
        lowered.append(w_low * scale)

    if len(vectors) < n:
        raise FrameDegenerate(point, len(vectors), n)
    return lam, vectors, tuple(skipped)


class FrameField:
    """All frame quantities at one point, built once and shared by the checks."""

    def __init__(self, scene: Scene, point: Sequence[float],
                 tolerances: Optional[Tolerances] = None):
        self.scene = scene
        self.tolerances = tolerances or DEFAULT_TOLERANCES
        self.point = validate_point(point, scene.n)
        self.n = scene.n
        self.eta = minkowski_eta(self.n)

        self.g_jet = scene.metric_jet(self.point)
        self.v_jet = scene.flow_jet(self.point)
        self.metric: MetricSample = metric_sample_from_jet(self.point, self.g_jet, self.tolerances)
        self.connection: ConnectionSample = christoffel(self.metric)

        self.lam_jet, vectors, self.skipped = gram_schmidt(
            self.g_jet, self.v_jet, self.point, self.tolerances
        )
        self.frame_jet = stack(vectors, axis=1)
        self.coframe_jet = contract('bm,ba->ma', self.frame_jet, self.g_jet) * self.eta[:, None]

        covariant = (self.frame_jet.derivative()
                     + contract('abg,gn->anb', self.connection.as_jet(), self.frame_jet))
        projected = contract('ma,anb->mnb', self.coframe_jet, covariant)
        self.gamma_hat_jet = contract('mnb,br->mnr', projected, self.frame_jet)

    @property
    def frame(self) -> np.ndarray:
        return self.frame_jet.value

    @property
    def coframe(self) -> np.ndarray:
        return self.coframe_jet.value

    @cached_property
    def sample(self) -> FrameSample:
        gh = self.gamma_hat_jet.value
        return FrameSample(
            point=self.point,
            lam=float(self.lam_jet.value),
            frame=self.frame,
            coframe=self.coframe,
            gamma_hat=gh,
            K=gh[1:, 0, 0].copy(),
            M=gh[1:, 0, 1:].copy(),
            A=gh[1:, 1:, 1:].copy(),
            B=gh[1:, 1:, 0].copy(),
            skipped=self.skipped,
        )

    def along_frame(self, gradient: np.ndarray) -> np.ndarray:
        """I_mu(f) from coordinate gradients, frame index last."""
        return directional(gradient, self.frame)

    @cached_property
    def riemann(self) -> RiemannSample:
        return riemann(self.connection)

    @cached_property
    def frame_riemann(self) -> np.ndarray:
        """R^mu_{nu rho sigma} in the adapted frame."""
        F = self.frame
        return np.einsum('ma,abcd,bn,cr,ds->mnrs', self.coframe, self.riemann.R, F, F, F,
                         optimize=True)

    @cached_property
    def lambda_derivatives(self) -> np.ndarray:
        """I_mu(lambda)."""
        return self.along_frame(self.lam_jet.gradient)


def adapt_frame(scene: Scene, point: Sequence[float],
                tolerances: Optional[Tolerances] = None) -> FrameSample:
    """Adapted orthonormal frame and connection split at a point."""
    return FrameField(scene, point, tolerances).sample
