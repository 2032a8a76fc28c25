"""Spatial and mixed frame curvature against the base connection and M."""
import logging
from typing import Dict, Optional, Sequence

import numpy as np

from ..frames.adapted_frame import FrameField
from ..frames.derivatives import base_curvature_of, d_derivatives
from ..geometry.scene import Scene
from ..utils.config import Tolerances
from ..utils.errors import HypothesisUnmet
from .base_identity import BaseIdentity, HomogeneousIdentity, IdentityResult

logger = logging.getLogger(__name__)


class BaseCurvatureIdentity(BaseIdentity):
    """R_ijkl = R~_ijkl + M_ij (M_kl - M_lk) + M_ik M_jl - M_il M_jk, any flow."""

    name = "base-curvature"
    form = "R_ijkl = R~_ijkl + M_ij (M_kl - M_lk) + M_ik M_jl - M_il M_jk"

    def terms(self, field: FrameField) -> Dict[str, np.ndarray]:
        M = field.sample.M
        return {
            'R_ijkl': field.frame_riemann[1:, 1:, 1:, 1:],
            '-R~_ijkl': -base_curvature_of(field).R_tilde,
            '-M_ij*(M_kl-M_lk)': -np.einsum('ij,kl->ijkl', M, M - M.T),
            '-M_ik*M_jl': -np.einsum('ik,jl->ijkl', M, M),
            'M_il*M_jk': np.einsum('il,jk->ijkl', M, M),
        }


def sectional_defect(field: FrameField) -> np.ndarray:
    """D[i, j] = R~_ijji - R_ijji, zero on the diagonal."""
    R = field.frame_riemann[1:, 1:, 1:, 1:]
    R_tilde = base_curvature_of(field).R_tilde
    defect = np.einsum('ijji->ij', R_tilde) - np.einsum('ijji->ij', R)
    np.fill_diagonal(defect, 0.0)
    return defect


class SectionalDefectIdentity(HomogeneousIdentity):
    """R~_ijji - R_ijji = 3 M_ij^2 for i != j, rigid flows in constant curvature."""

    name = "sectional-defect"
    form = "R~_ijji - R_ijji = 3 (M_ij)^2, i != j"

    def precondition(self, field: FrameField) -> None:
        super().precondition(field)
        M = field.sample.M
        shear = float(np.max(np.abs(0.5 * (M + M.T)), initial=0.0))
        if shear >= self.tolerances.verdict:
            raise HypothesisUnmet(f"{self.name}: flow is not rigid at "
                                  f"{field.point.tolist()} (|M_(ij)| = {shear:.3e})")

    def terms(self, field: FrameField) -> Dict[str, np.ndarray]:
        M = field.sample.M
        square = 3.0 * M ** 2
        np.fill_diagonal(square, 0.0)
        return {'R~_ijji-R_ijji': sectional_defect(field), '-3*M_ij^2': -square}


class MixedCurvatureIdentity(HomogeneousIdentity):
    """R^0_{ijk} = M_{ik;j} - M_{ij;k} + K_i (M_jk - M_kj), in constant curvature."""

    name = "mixed-curvature"
    form = "R^0_{ijk} = M_{ik;j} - M_{ij;k} + K_i (M_jk - M_kj)"

    def terms(self, field: FrameField) -> Dict[str, np.ndarray]:
        fs = field.sample
        M_cd = d_derivatives(field).M_cd  # [i, j, k] = M_{ij;k}
        return {
            'R^0_{ijk}': field.frame_riemann[0, 1:, 1:, 1:],
            '-M_{ik;j}': -np.swapaxes(M_cd, 1, 2),
            'M_{ij;k}': M_cd,
            '-K_i*(M_jk-M_kj)': -np.einsum('i,jk->ijk', fs.K, fs.M - fs.M.T),
        }


def check_base_curvature(scene: Scene, point: Sequence[float],
                         field: Optional[FrameField] = None,
                         tolerances: Optional[Tolerances] = None) -> IdentityResult:
    return BaseCurvatureIdentity(tolerances).check(scene, point, field)


def check_sectional_defect(scene: Scene, point: Sequence[float],
                           field: Optional[FrameField] = None,
                           tolerances: Optional[Tolerances] = None,
                           kappa: Optional[float] = None) -> IdentityResult:
    return SectionalDefectIdentity(tolerances, kappa).check(scene, point, field)


def check_mixed_curvature(scene: Scene, point: Sequence[float],
                          field: Optional[FrameField] = None,
                          tolerances: Optional[Tolerances] = None,
                          kappa: Optional[float] = None) -> IdentityResult:
    return MixedCurvatureIdentity(tolerances, kappa).check(scene, point, field)
