from typing import Any, Mapping, Sequence

import numpy as np

from .errors import ParamOutOfRange, SchemaError


def validate_point(point: Any, dimension: int, name: str = "point") -> np.ndarray:
    """Validate a coordinate point and return it as a float array."""
    array = np.asarray(point, dtype=float)
    if array.shape != (dimension,):
        raise SchemaError(name, f"expected {dimension} coordinates, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise SchemaError(name, f"coordinates must be finite, got {array.tolist()}")
    return array


def validate_box(lower: Sequence[float], upper: Sequence[float], dimension: int) -> None:
    """Validate a sampling box."""
    lo = validate_point(lower, dimension, "domain.min")
    hi = validate_point(upper, dimension, "domain.max")
    if np.any(lo > hi):
        raise SchemaError("domain", f"min {lo.tolist()} exceeds max {hi.tolist()}")


def validate_square(matrix: np.ndarray, name: str = "matrix") -> None:
    """Validate that an array is a square matrix."""
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"{name} must be square, got shape {matrix.shape}")


def validate_params(params: Mapping[str, float],
                    ranges: Mapping[str, Sequence[float]]) -> None:
    """Validate parameter values against closed [low, high] ranges."""
    for key, value in params.items():
        if key not in ranges:
            raise ParamOutOfRange(key, value, f"not a parameter (known: {sorted(ranges)})")
        low, high = ranges[key]
        if not np.isfinite(value) or value < low or value > high:
            raise ParamOutOfRange(key, value, f"must lie in [{low}, {high}]")
