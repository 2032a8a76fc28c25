from .logger import setup_logger
from .validators import validate_point, validate_box, validate_square, validate_params
from .config import Tolerances, DEFAULT_TOLERANCES, load_config

__all__ = [
    'setup_logger',
    'validate_point',
    'validate_box',
    'validate_square',
    'validate_params',
    'Tolerances',
    'DEFAULT_TOLERANCES',
    'load_config',
]
