"""Command-line surface: analyze, verify, theorem and models.

Exit codes: 0 all asserted checks pass, 1 a verdict failed, 2 usage or
schema error, 3 numerical failure at scene level.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from ..analysis.engine import AnalysisEngine
from ..analysis.report import emit_report
from ..analysis.sampling import SamplePlan
from ..analysis.scene_loader import load_scene
from ..geometry.scene import Scene
from ..identities.suite import SUITES
from ..kinematics.theorem import COUNTEREXAMPLE_CANDIDATE
from ..models.catalog import build_model, list_models
from ..utils.config import Tolerances, load_config
from ..utils.errors import (
    DomainError, ExpressionSyntaxError, NumericalError, ParamOutOfRange, SchemaError,
    UnknownModel, UnknownSymbol,
)
from ..utils.logger import setup_logger

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2, 3
USAGE_ERRORS = (SchemaError, ExpressionSyntaxError, UnknownSymbol, UnknownModel, ParamOutOfRange)
NUMERICAL_ERRORS = (NumericalError, DomainError)


def _assignments(items: Optional[List[str]], field: str,
                 numeric: bool = True) -> Dict[str, Any]:
    """Parse repeated k=v flags."""
    values: Dict[str, Any] = {}
    for item in items or []:
        key, sep, value = item.partition('=')
        if not sep or not key.strip():
            raise SchemaError(field, f"expected k=v, got {item!r}")
        key = key.strip()
        if numeric or key != 'plane':
            try:
                values[key] = float(value)
            except ValueError:
                raise SchemaError(field, f"{key} must be a number, got {value!r}") from None
        else:
            values[key] = value
    return values


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--format', choices=['text', 'json'], default='text')
    parser.add_argument('--config', help="YAML file merged over the packaged defaults")
    parser.add_argument('--log-level', help="DEBUG, INFO, WARNING, ERROR or CRITICAL")
    parser.add_argument('--output', help="write the report here instead of stdout")


def _scene_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--scene', help="JSON scene file")
    source.add_argument('--model', help="catalog metric name")
    parser.add_argument('--dim', type=int, default=4)
    parser.add_argument('--param', action='append', metavar='K=V')
    parser.add_argument('--flow')
    parser.add_argument('--flow-param', action='append', metavar='K=V')
    parser.add_argument('--points', help="random:N or grid:R")
    parser.add_argument('--seed', type=int)
    parser.add_argument('--tol', type=float, help="verdict tolerance")
    _common(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='rigidflow',
        description="Flow-adapted frame checks of rigidity, rotation and isometry.",
    )
    commands = parser.add_subparsers(dest='command', required=True)

    analyze = commands.add_parser('analyze', help="kinematics, verdicts, identities, theorem")
    _scene_arguments(analyze)
    verify = commands.add_parser('verify', help="run an identity suite")
    _scene_arguments(verify)
    verify.add_argument('--suite', choices=sorted(SUITES), default='all')
    theorem = commands.add_parser('theorem', help="rotational rigid flow => isometric flow")
    _scene_arguments(theorem)
    models = commands.add_parser('models', help="print the model catalog")
    models.add_argument('--domains', action='store_true',
                        help="include recommended domains in dimension 4")
    _common(models)
    return parser


def _scene(args: argparse.Namespace) -> Scene:
    if args.scene:
        if args.param or args.flow or args.flow_param:
            raise SchemaError('scene', "--param/--flow/--flow-param apply to --model only")
        return load_scene(args.scene)
    return build_model(args.model, args.dim, _assignments(args.param, 'param'),
                       args.flow, _assignments(args.flow_param, 'flow-param', numeric=False))


def _plan(args: argparse.Namespace, scene: Scene, config: Dict[str, Any]) -> SamplePlan:
    if scene.domain is None:
        raise SchemaError('domain', f"scene {scene.name} declares no sampling domain")
    sampling = config.get('sampling', {})
    text = args.points or f"{sampling.get('kind', 'random')}:{sampling.get('count', 50)}"
    seed = args.seed if args.seed is not None else int(sampling.get('seed', 42))
    return SamplePlan.parse(text, scene.domain[0], scene.domain[1], seed)


def _write(data: bytes, output: Optional[str]) -> None:
    if output:
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _models(args: argparse.Namespace) -> int:
    descriptors = [d.to_dict() for d in list_models(with_domains=args.domains)]
    if args.format == 'json':
        data = json.dumps(descriptors, sort_keys=True, indent=2) + "\n"
    else:
        rows = [{
            'name': d['name'],
            'kind': d['kind'],
            'min_dim': d['min_dimension'],
            'parameters': ", ".join(f"{k}={v['default']:g}" for k, v in d['parameters'].items()),
            'kappa': d.get('kappa'),
            'expected': (None if d.get('expected') is None else
                         " ".join(f"{k}={v}" for k, v in d['expected'].items()
                                  if k != 'kappa')),
        } for d in descriptors]
        data = pd.DataFrame(rows).to_string(index=False) + "\n"
    _write(data.encode('utf-8'), args.output)
    return EXIT_OK


def run(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    setup_logger('src', args.log_level or config.get('logging', {}).get('level', 'WARNING'))
    if args.command == 'models':
        return _models(args)

    tolerances = Tolerances.from_config(config).with_verdict(args.tol)
    scene = _scene(args)
    plan = _plan(args, scene, config)
    engine = AnalysisEngine(scene, tolerances, suite=getattr(args, 'suite', 'all'))
    report = engine.run(plan, args.command)
    _write(emit_report(report, args.format), args.output)

    if args.command == 'theorem':
        return EXIT_FAILED if report.conclusion == COUNTEREXAMPLE_CANDIDATE else EXIT_OK
    return EXIT_OK if report.all_passed else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NUMERICAL_ERRORS as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == '__main__':
    sys.exit(main())
