"""Configuration loading: YAML files merged over packaged defaults."""
import copy
import logging
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .errors import SchemaError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "config" / "default.yaml"

DEFAULT_CONFIG: Dict[str, Any] = {
    'tolerances': {
        'verdict': 1e-6,
        'rotation': 1e-4,
        'identity': 1e-7,
        'homogeneity': 1e-7,
    },
    'numerics': {
        'nondegenerate': 1e-10,
        'timelike': 1e-10,
        'gram_schmidt': 1e-10,
        'branch_band': 1e-8,
    },
    'sampling': {'kind': 'random', 'count': 50, 'seed': 42},
    'logging': {'level': 'WARNING'},
}


@dataclass(frozen=True)
class Tolerances:
    """Verdict tolerances and numeric thresholds used across the pipeline."""
    verdict: float = 1e-6
    rotation: float = 1e-4
    identity: float = 1e-7
    homogeneity: float = 1e-7
    nondegenerate: float = 1e-10
    timelike: float = 1e-10
    gram_schmidt: float = 1e-10
    branch_band: float = 1e-8

    @classmethod
    def from_config(cls, config: Optional[Dict[str, Any]] = None) -> "Tolerances":
        config = config or DEFAULT_CONFIG
        values = {}
        values.update(config.get('tolerances', {}))
        values.update(config.get('numerics', {}))
        known = set(cls.__dataclass_fields__)
        unknown = sorted(set(values) - known)
        if unknown:
            raise SchemaError('tolerances', f"unknown keys {unknown}")
        for key, value in values.items():
            if not isinstance(value, (int, float)) or value <= 0:
                raise SchemaError(key, f"must be a positive number, got {value!r}")
        return cls(**{k: float(v) for k, v in values.items()})

    def with_verdict(self, tol: Optional[float]) -> "Tolerances":
        if tol is None:
            return self
        if tol <= 0:
            raise SchemaError('tol', f"must be positive, got {tol}")
        return replace(self, verdict=float(tol))

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


DEFAULT_TOLERANCES = Tolerances()


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """Load the packaged defaults, then merge the YAML file at `path` if given."""
    config = copy.deepcopy(DEFAULT_CONFIG)
    sources = [DEFAULT_CONFIG_PATH] if DEFAULT_CONFIG_PATH.exists() else []
    if path is not None:
        user_path = Path(path)
        if not user_path.exists():
            raise SchemaError('config', f"file not found: {path}")
        sources.append(user_path)

    for source in sources:
        try:
            with open(source, 'r', encoding='utf-8') as handle:
                data = yaml.safe_load(handle) or {}
        except yaml.YAMLError as e:
            logger.error(f"Could not parse config {source}: {e}")
            raise SchemaError('config', f"invalid YAML in {source}: {e}")
        if not isinstance(data, dict):
            raise SchemaError('config', f"{source} must contain a mapping")
        config = _deep_merge(config, data)
        logger.debug(f"Merged configuration from {source}")

    return config
