from .adapted_frame import FrameSample, FrameField, adapt_frame, gram_schmidt, minkowski_eta
from .derivatives import (
    DSample, BaseCurvatureSample, d_derivatives, base_curvature_of,
    covariant_D_derivatives, base_curvature,
)

__all__ = [
    'FrameSample', 'FrameField', 'adapt_frame', 'gram_schmidt', 'minkowski_eta',
    'DSample', 'BaseCurvatureSample', 'd_derivatives', 'base_curvature_of',
    'covariant_D_derivatives', 'base_curvature',
]
