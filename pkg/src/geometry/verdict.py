from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..utils.errors import SchemaError


@dataclass(frozen=True)
class Verdict:
    """Max-reduction of a residual over a sample set against a tolerance."""
    criterion: str
    worst_residual: float
    worst_point: Optional[List[float]]
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.worst_residual < self.tolerance

    @classmethod
    def from_residuals(cls, criterion: str, residuals: Sequence[float],
                       points: Sequence[Sequence[float]], tolerance: float) -> "Verdict":
        if len(residuals) == 0:
            raise SchemaError('points', f"verdict {criterion} needs at least one residual")
        residuals = np.asarray(residuals, dtype=float)
        worst = int(np.argmax(residuals))
        return cls(criterion, float(residuals[worst]),
                   [float(v) for v in points[worst]], float(tolerance))

    def label(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'criterion': self.criterion,
            'passed': self.passed,
            'worst_residual': self.worst_residual,
            'worst_point': self.worst_point,
            'tolerance': self.tolerance,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Verdict":
        return cls(data['criterion'], float(data['worst_residual']),
                   data.get('worst_point'), float(data['tolerance']))
