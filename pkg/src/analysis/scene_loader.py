from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Optional, Union
import json
import logging

from ..geometry.scene import Scene
from ..utils.errors import SchemaError

logger = logging.getLogger(__name__)

REQUIRED_FIELDS = ('dimension', 'coordinates', 'metric', 'flow')
OPTIONAL_FIELDS = ('parameters', 'kappa', 'domain', 'name')
MAX_CACHED_SCENES = 32


class BaseSceneLoader(ABC):
    """Abstract base class for scene loaders."""

    def __init__(self, config: Optional[Dict[str, Any]] = None,
                 max_cached: int = MAX_CACHED_SCENES):
        if max_cached < 1:
            raise SchemaError('max_cached', f"must be at least 1, got {max_cached}")
        self.config = config or {}
        self.max_cached = max_cached
        self._cache: Dict[str, Scene] = {}

    @abstractmethod
    def read_document(self, path: Path) -> Dict[str, Any]:
        """Read the raw scene document."""
        pass

    def load(self, path: Union[str, Path]) -> Scene:
        path = Path(path)
        key = str(path.resolve())
        cached = self.get_cached_scene(key)
        if cached is not None:
            return cached
        if not path.is_file():
            raise SchemaError('path', f"no such scene file: {path}")
        scene = scene_from_document(self.read_document(path), default_name=path.stem)
        self.cache_scene(key, scene)
        logger.info(f"Loaded scene {scene.name} (n={scene.n}) from {path}")
        return scene

    def get_cached_scene(self, key: str) -> Optional[Scene]:
        """Retrieve a scene from cache if available."""
        return self._cache.get(key)

    def cache_scene(self, key: str, scene: Scene) -> None:
        """Store a scene, dropping the oldest entry once the cache is full."""
        if key not in self._cache and len(self._cache) >= self.max_cached:
            oldest = next(iter(self._cache))
            del self._cache[oldest]
            logger.debug(f"Evicted cached scene {oldest}")
        self._cache[key] = scene

    def clear_cache(self) -> None:
        self._cache.clear()


class JsonSceneLoader(BaseSceneLoader):
    """UTF-8 JSON scene documents."""

    def read_document(self, path: Path) -> Dict[str, Any]:
        try:
            document = json.loads(path.read_text(encoding='utf-8'))
        except (UnicodeDecodeError, json.JSONDecodeError) as e:
            raise SchemaError('document', f"not valid UTF-8 JSON: {e}") from None
        if not isinstance(document, dict):
            raise SchemaError('document', "top level must be an object")
        return document


def _number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(field, f"expected a number, got {value!r}")
    return float(value)


def scene_from_document(document: Dict[str, Any], default_name: str = "scene") -> Scene:
    missing = [f for f in REQUIRED_FIELDS if f not in document]
    if missing:
        raise SchemaError(missing[0], "required field is missing")
    unknown = sorted(set(document) - set(REQUIRED_FIELDS) - set(OPTIONAL_FIELDS))
    if unknown:
        raise SchemaError(unknown[0], "unknown field")

    dimension = document['dimension']
    if isinstance(dimension, bool) or not isinstance(dimension, int) or dimension < 2:
        raise SchemaError('dimension', f"expected an integer >= 2, got {dimension!r}")
    coords = document['coordinates']
    if not isinstance(coords, list) or len(coords) != dimension:
        raise SchemaError('coordinates', f"expected {dimension} names")
    metric = document['metric']
    if not isinstance(metric, list) or any(not isinstance(row, list) for row in metric):
        raise SchemaError('metric', "expected a list of rows")
    flow = document['flow']
    if not isinstance(flow, list):
        raise SchemaError('flow', "expected a list of expressions")

    params = document.get('parameters') or {}
    if not isinstance(params, dict):
        raise SchemaError('parameters', "expected an object")
    params = {k: _number(v, f'parameters.{k}') for k, v in params.items()}

    kappa = document.get('kappa')
    kappa = None if kappa is None else _number(kappa, 'kappa')

    domain = document.get('domain')
    if domain is not None:
        if not isinstance(domain, dict) or set(domain) != {'min', 'max'}:
            raise SchemaError('domain', "expected an object with 'min' and 'max'")
        domain = (domain['min'], domain['max'])

    return Scene.from_texts(coords, metric, flow, params, kappa, domain,
                            name=str(document.get('name') or default_name))


def load_scene(path: Union[str, Path]) -> Scene:
    """Load a JSON scene file."""
    return JsonSceneLoader().load(path)
