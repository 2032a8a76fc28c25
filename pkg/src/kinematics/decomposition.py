"""Split of the flow gradient M into vorticity, shear and expansion."""
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from ..frames.adapted_frame import FrameSample
from ..utils.validators import validate_square


@dataclass(frozen=True)
class KinematicInvariants:
    lam: float
    acceleration: np.ndarray
    vorticity: np.ndarray
    shear: np.ndarray
    expansion: float

    @property
    def acceleration_norm(self) -> float:
        return float(np.linalg.norm(self.acceleration))

    @property
    def vorticity_magnitude(self) -> float:
        return float(np.sqrt(0.5 * np.sum(self.vorticity ** 2)))

    @property
    def shear_magnitude(self) -> float:
        return float(np.sqrt(0.5 * np.sum(self.shear ** 2)))

    def to_dict(self) -> Dict[str, object]:
        return {
            'lambda': self.lam,
            'acceleration': [float(a) for a in self.acceleration],
            'acceleration_norm': self.acceleration_norm,
            'vorticity_magnitude': self.vorticity_magnitude,
            'shear_magnitude': self.shear_magnitude,
            'expansion': self.expansion,
        }


def decompose_m(M: np.ndarray) -> Tuple[np.ndarray, np.ndarray, float]:
    """Antisymmetric part, traceless symmetric part and trace of M."""
    M = np.asarray(M, dtype=float)
    validate_square(M, "M")
    dim = M.shape[0]
    vorticity = 0.5 * (M - M.T)
    expansion = float(np.trace(M))
    shear = 0.5 * (M + M.T) - (expansion / dim) * np.eye(dim)
    return vorticity, shear, expansion


def kinematic_invariants(sample: FrameSample) -> KinematicInvariants:
    vorticity, shear, expansion = decompose_m(sample.M)
    return KinematicInvariants(sample.lam, sample.K.copy(), vorticity, shear, expansion)
