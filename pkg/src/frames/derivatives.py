"""D-covariant derivatives of K and M, and the curvature of the base connection.

The base connection absorbs the inessential torsion:
omega~^i_j = omega^i_j - M^i_j omega^0, i.e. omega~^i_j(I_k) = A^i_jk and
omega~^i_j(I_0) = B^i_j - M^i_j.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..expressions.jets import contract
from ..geometry.scene import Scene
from ..utils.config import Tolerances
from .adapted_frame import FrameField

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DSample:
    """K_cd[i, j] = K_{i;j}, K_dot[i], M_cd[i, j, k] = M_{ij;k}, M_dot[i, j].

    K_naive[i] = I_0(K_i), the derivative without the connection terms.
    """
    K_cd: np.ndarray
    K_dot: np.ndarray
    M_cd: np.ndarray
    M_dot: np.ndarray
    K_naive: np.ndarray


@dataclass(frozen=True)
class BaseCurvatureSample:
    """R_tilde[i, j, k, l] = R~^i_{jkl}, antisymmetric in (k, l)."""
    R_tilde: np.ndarray


def d_derivatives(field: FrameField) -> DSample:
    fs = field.sample
    K, M, A, B = fs.K, fs.M, fs.A, fs.B
    flow_rotation = B - M  # omega~^l_i(I_0)

    gh = field.gamma_hat_jet
    dK = field.along_frame(gh[1:, 0, 0].gradient)    # [i, mu]
    dM = field.along_frame(gh[1:, 0, 1:].gradient)   # [i, j, mu]

    K_cd = dK[:, 1:] - np.einsum('k,kij->ij', K, A)
    K_dot = dK[:, 0] - np.einsum('k,ki->i', K, flow_rotation)
    M_cd = (dM[:, :, 1:] - np.einsum('lj,lik->ijk', M, A)
            - np.einsum('il,ljk->ijk', M, A))
    M_dot = (dM[:, :, 0] - np.einsum('lj,li->ij', M, flow_rotation)
             - np.einsum('il,lj->ij', M, flow_rotation))
    return DSample(K_cd, K_dot, M_cd, M_dot, dK[:, 0].copy())


def base_curvature_of(field: FrameField) -> BaseCurvatureSample:
    gh = field.gamma_hat_jet
    coframe = field.coframe_jet
    # omega~^i_j as a coordinate 1-form field: [i, j, alpha]
    connection = (contract('ijk,ka->ija', gh[1:, 1:, 1:], coframe[1:])
                  + contract('ij,a->ija', gh[1:, 1:, 0] - gh[1:, 0, 1:], coframe[0]))

    spatial = field.frame[:, 1:]
    on_frame = np.einsum('ima,ak->imk', connection.value, spatial)  # omega~^i_m(I_k)
    # gradient[i, j, beta, alpha] = d_alpha omega~^i_{j beta}
    half = (np.einsum('ijba,ak,bl->ijkl', connection.gradient, spatial, spatial, optimize=True)
            + np.einsum('imk,mjl->ijkl', on_frame, on_frame))
    return BaseCurvatureSample(half - np.swapaxes(half, 2, 3))


def covariant_D_derivatives(scene: Scene, point: Sequence[float],
                            tolerances: Optional[Tolerances] = None) -> DSample:
    """K_{i;j}, K_dot, M_{ij;k} and M_dot at a point."""
    return d_derivatives(FrameField(scene, point, tolerances))


def base_curvature(scene: Scene, point: Sequence[float],
                   tolerances: Optional[Tolerances] = None) -> BaseCurvatureSample:
    """Frame components of the base curvature R~^i_{jkl} at a point."""
    return base_curvature_of(FrameField(scene, point, tolerances))
