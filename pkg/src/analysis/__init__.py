from .scene_loader import BaseSceneLoader, JsonSceneLoader, load_scene, scene_from_document
from .sampling import SamplePlan, GENERATOR
from .report import Report, emit_report, CONVENTIONS
from .engine import AnalysisEngine, run_analysis, COMMAND_STEPS

__all__ = [
    'BaseSceneLoader', 'JsonSceneLoader', 'load_scene', 'scene_from_document',
    'SamplePlan', 'GENERATOR',
    'Report', 'emit_report', 'CONVENTIONS',
    'AnalysisEngine', 'run_analysis', 'COMMAND_STEPS',
]
