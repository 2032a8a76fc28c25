"""Report assembly and deterministic text/JSON emission."""
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from ..geometry.verdict import Verdict

logger = logging.getLogger(__name__)

FORMATS = ('text', 'json')

CONVENTIONS = {
    'connection': "omega^mu_nu(X) = omega^mu(nabla_X I_nu); curvature 2-form d omega + omega ^ omega",
    'riemann': "R(X,Y) I_nu = R^mu_{nu rho sigma} X^rho Y^sigma I_mu",
    'brackets': "antisymmetrisation [ij] and symmetrisation (ij) carry weight 1/2",
    'frame': "Gram-Schmidt over the coordinate basis in coordinate order, eta = diag(-1, 1, ..., 1)",
    'identity residual': "max |sum of terms| / (1 + max term magnitude)",
    'killing residual': "max |L_V g| / (1 + max(|V^r d_r g|, |g d V|))",
    'homogeneity residual': "max |R_abcd - k (g g - g g)| / (1 + max |R_abcd|)",
    'kinematic criteria': "raw magnitudes of M_(ij), K_[i;j], K_dot, M_dot",
    'vorticity magnitude': "sqrt(1/2 sum_ij omega_ij^2)",
}


@dataclass
class Report:
    """Everything one CLI run produces; point records are ordered by sample index."""
    command: str
    scene: Dict[str, Any]
    plan: Dict[str, Any]
    tolerances: Dict[str, float]
    conventions: Dict[str, str] = field(default_factory=dict)
    points: List[Dict[str, Any]] = field(default_factory=list)
    excluded: List[Dict[str, Any]] = field(default_factory=list)
    verdicts: List[Verdict] = field(default_factory=list)
    identities: List[Dict[str, Any]] = field(default_factory=list)
    identity_verdicts: List[Verdict] = field(default_factory=list)
    skipped: List[Dict[str, Any]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    theorem: Optional[Dict[str, Any]] = None
    conclusion: Optional[str] = None

    @property
    def all_passed(self) -> bool:
        return all(v.passed for v in self.verdicts + self.identity_verdicts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'scene': self.scene,
            'plan': self.plan,
            'tolerances': self.tolerances,
            'conventions': self.conventions,
            'points': self.points,
            'excluded': self.excluded,
            'verdicts': [v.to_dict() for v in self.verdicts],
            'identities': self.identities,
            'identity_verdicts': [v.to_dict() for v in self.identity_verdicts],
            'skipped': self.skipped,
            'notes': self.notes,
            'theorem': self.theorem,
            'conclusion': self.conclusion,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        data = dict(data)
        data['verdicts'] = [Verdict.from_dict(v) for v in data.get('verdicts', [])]
        data['identity_verdicts'] = [Verdict.from_dict(v)
                                     for v in data.get('identity_verdicts', [])]
        return cls(**data)

    def to_frame(self) -> pd.DataFrame:
        """One row per analysed point."""
        if not self.points:
            return pd.DataFrame()
        frame = pd.json_normalize(self.points, sep='.')
        return frame.set_index('index')


def _verdict_line(prefix: str, v: Verdict) -> str:
    return (f"{prefix} {v.criterion} {v.label()} worst={v.worst_residual:.6e} "
            f"tol={v.tolerance:g} at={v.worst_point}")


def _render_text(report: Report) -> str:
    scene = report.scene
    lines = [
        f"rigidflow {report.command}",
        f"scene: {scene.get('name')} (n={scene.get('dimension')}, kappa={scene.get('kappa')})",
        f"coordinates: {', '.join(scene.get('coordinates', []))}",
        f"flow: {scene.get('flow')}",
        f"parameters: {scene.get('parameters')}",
    ]
    plan = report.plan
    lines.append(f"plan: {plan.get('kind')}:{plan.get('size')} seed={plan.get('seed')} "
                 f"generator={plan.get('generator')}")
    lines.append("tolerances: " + ", ".join(f"{k}={v:g}"
                                            for k, v in sorted(report.tolerances.items())))
    lines.append("conventions:")
    lines.extend(f"  {k}: {v}" for k, v in sorted(report.conventions.items()))
    lines.append("")

    lines.extend(_verdict_line("VERDICT", v) for v in report.verdicts)
    lines.extend(_verdict_line("IDENTITY", v) for v in report.identity_verdicts)
    if report.conclusion is not None:
        lines.append(f"CONCLUSION {report.conclusion}")
    lines.extend(f"NOTE {note}" for note in report.notes)
    if report.skipped:
        counts: Dict[str, int] = {}
        for s in report.skipped:
            counts[s['identity']] = counts.get(s['identity'], 0) + 1
        lines.extend(f"SKIPPED {name} at {count} points" for name, count in sorted(counts.items()))
    lines.extend(f"EXCLUDED point {e['index']}: {e['reason']}" for e in report.excluded)

    frame = report.to_frame()
    if not frame.empty:
        columns = [c for c in frame.columns
                   if not isinstance(frame[c].iloc[0], (list, tuple, dict))]
        lines.append("")
        lines.append(frame[columns].to_string(float_format=lambda x: f"{x:.6e}"))
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: str = 'text') -> bytes:
    """Deterministic bytes: sorted JSON keys, points in sample order."""
    if fmt not in FORMATS:
        raise ValueError(f"Unknown report format {fmt!r}; choose from {FORMATS}")
    if fmt == 'json':
        text = json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"
    else:
        text = _render_text(report)
    return text.encode('utf-8')
