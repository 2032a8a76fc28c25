"""Relations between the D-derivatives of K and M and the curvature R^0_{i0j}."""
from typing import Dict, Optional, Sequence

import numpy as np

from ..frames.adapted_frame import FrameField
from ..frames.derivatives import d_derivatives
from ..geometry.scene import Scene
from ..utils.config import Tolerances
from ..utils.errors import ModeUnavailable
from .base_identity import BaseIdentity, IdentityResult

MODES = ('flat', 'general', 'auto')


def _antisym(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a - a.T)


class VorticityTransportIdentity(BaseIdentity):
    """K_[i;j] = M_dot_[ij], brackets of weight 1/2."""

    name = "vorticity-transport"
    form = "K_[i;j] = M_dot_[ij]"

    def terms(self, field: FrameField) -> Dict[str, np.ndarray]:
        ds = d_derivatives(field)
        return {'K_[i;j]': _antisym(ds.K_cd), '-M_dot_[ij]': -_antisym(ds.M_dot)}


class AccelerationGradientIdentity(BaseIdentity):
    """R^0_{i0j} = -K_{i;j} - K_i K_j + M_dot_ij - M_ki M_kj.

    flat mode drops the curvature term and refuses curved points; general mode
    uses the measured frame component; auto picks flat where the curvature vanishes.
    """

    name = "acceleration-gradient"
    form = "R^0_{i0j} = -K_{i;j} - K_i K_j + M_dot_ij - M_ki M_kj"

    def __init__(self, tolerances: Optional[Tolerances] = None, mode: str = 'auto'):
        super().__init__(tolerances)
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        self.mode = mode

    def _is_flat(self, field: FrameField) -> bool:
        return float(np.max(np.abs(field.frame_riemann))) < self.tolerances.identity

    def precondition(self, field: FrameField) -> None:
        if self.mode == 'flat' and not self._is_flat(field):
            raise ModeUnavailable(
                f"{self.name}: flat mode on a curved point {field.point.tolist()} "
                f"(max |R| = {float(np.max(np.abs(field.frame_riemann))):.3e})"
            )

    def terms(self, field: FrameField) -> Dict[str, np.ndarray]:
        fs = field.sample
        ds = d_derivatives(field)
        terms = {
            'K_{i;j}': ds.K_cd,
            'K_i*K_j': np.outer(fs.K, fs.K),
            '-M_dot_ij': -ds.M_dot,
            'M_ki*M_kj': fs.M.T @ fs.M,
        }
        general = self.mode == 'general' or (self.mode == 'auto' and not self._is_flat(field))
        if general:
            terms['R^0_{i0j}'] = field.frame_riemann[0, 1:, 0, 1:]
        return terms


def check_vorticity_transport(scene: Scene, point: Sequence[float],
                              field: Optional[FrameField] = None,
                              tolerances: Optional[Tolerances] = None) -> IdentityResult:
    return VorticityTransportIdentity(tolerances).check(scene, point, field)


def check_acceleration_gradient(scene: Scene, point: Sequence[float], mode: str = 'auto',
                                field: Optional[FrameField] = None,
                                tolerances: Optional[Tolerances] = None) -> IdentityResult:
    return AccelerationGradientIdentity(tolerances, mode).check(scene, point, field)
