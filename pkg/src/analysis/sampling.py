"""Deterministic sample plans over a coordinate box."""
import itertools
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from ..utils.errors import SchemaError
from ..utils.validators import validate_box

GENERATOR = "PCG64"
KINDS = ('random', 'grid')


@dataclass(frozen=True)
class SamplePlan:
    """`size` is the point count for random plans and the per-axis resolution for grids."""
    kind: str
    size: int
    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    seed: int = 42

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaError('points', f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.size < 1:
            raise SchemaError('points', f"plan is empty ({self.kind}:{self.size})")
        validate_box(self.lower, self.upper, len(self.lower))

    @classmethod
    def parse(cls, text: str, lower: Sequence[float], upper: Sequence[float],
              seed: int = 42) -> "SamplePlan":
        """From 'random:N' or 'grid:R'."""
        kind, _, size = text.partition(':')
        try:
            size = int(size)
        except ValueError:
            raise SchemaError('points', f"expected random:N or grid:R, got {text!r}") from None
        return cls(kind.strip(), size, tuple(map(float, lower)), tuple(map(float, upper)),
                   int(seed))

    @property
    def dimension(self) -> int:
        return len(self.lower)

    def points(self) -> np.ndarray:
        lower, upper = np.array(self.lower), np.array(self.upper)
        if self.kind == 'random':
            rng = np.random.Generator(np.random.PCG64(self.seed))
            return lower + (upper - lower) * rng.random((self.size, self.dimension))
        if self.size == 1:
            return (0.5 * (lower + upper))[None, :]
        axes = [np.linspace(lo, hi, self.size) for lo, hi in zip(lower, upper)]
        return np.array(list(itertools.product(*axes)))

    def __len__(self) -> int:
        return self.size if self.kind == 'random' else self.size ** self.dimension

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind,
            'size': self.size,
            'domain': {'min': list(self.lower), 'max': list(self.upper)},
            'seed': self.seed,
            'generator': GENERATOR,
        }
