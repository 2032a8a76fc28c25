import json

import pytest

from src.cli.main import EXIT_FAILED, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, main
from src.kinematics import HYPOTHESIS_UNMET, THEOREM_INSTANTIATED


class TestAnalyze:
    def test_rotating_minkowski(self, capsys):
        code = main(['analyze', '--model', 'minkowski', '--flow', 'rotating',
                     '--flow-param', 'omega=0.5', '--points', 'random:5', '--format', 'json'])
        report = json.loads(capsys.readouterr().out)
        assert code == EXIT_OK
        assert report['conclusion'] == THEOREM_INSTANTIATED
        assert report['plan']['size'] == 5
        assert report['plan']['seed'] == 42

    def test_failed_verdict(self, capsys):
        code = main(['analyze', '--model', 'minkowski', '--flow', 'milne', '--points', 'random:3'])
        out = capsys.readouterr().out
        assert code == EXIT_FAILED
        assert "VERDICT firstprop FAIL" in out

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code = main(['analyze', '--model', 'de_sitter', '--flow', 'rotating', '--points',
                     'random:3', '--seed', '7', '--format', 'json', '--output', str(target)])
        assert code == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text())['plan']['seed'] == 7

    def test_tolerance_flag(self, capsys):
        main(['analyze', '--model', 'minkowski', '--points', 'random:2', '--tol', '1e-3',
              '--format', 'json'])
        report = json.loads(capsys.readouterr().out)
        assert report['tolerances']['verdict'] == 1e-3


class TestTheorem:
    def test_instantiated(self, capsys):
        code = main(['theorem', '--model', 'anti_de_sitter', '--flow', 'rotating',
                     '--points', 'random:4'])
        assert code == EXIT_OK
        assert f"CONCLUSION {THEOREM_INSTANTIATED}" in capsys.readouterr().out

    def test_hypothesis_unmet_is_not_a_failure(self, capsys):
        code = main(['theorem', '--model', 'einstein_static', '--flow', 'rotating',
                     '--points', 'random:4'])
        assert code == EXIT_OK
        assert f"CONCLUSION {HYPOTHESIS_UNMET}" in capsys.readouterr().out


class TestVerify:
    def test_scene_file(self, tmp_path, capsys):
        path = tmp_path / "disk.json"
        path.write_text(json.dumps({
            'dimension': 3,
            'coordinates': ['t', 'x', 'y'],
            'metric': [['-1', '0', '0'], [None, '1', '0'], [None, None, '1']],
            'flow': ['1', '-w*y', 'w*x'],
            'parameters': {'w': 0.5},
            'kappa': 0.0,
            'domain': {'min': [-1.0, 0.3, -0.8], 'max': [1.0, 0.8, 0.8]},
        }))
        code = main(['verify', '--scene', str(path), '--suite', 'structural',
                     '--points', 'grid:2'])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "IDENTITY first-structural PASS" in out
        assert "IDENTITY vorticity-transport" not in out


class TestExitCodes:
    @pytest.mark.parametrize("argv", [
        ['analyze', '--model', 'schwarzschild'],
        ['analyze', '--model', 'minkowski', '--param', 'k=1'],
        ['analyze', '--model', 'minkowski', '--points', 'random:0'],
        ['analyze', '--model', 'minkowski', '--flow-param', 'omega'],
        ['analyze', '--model', 'minkowski', '--log-level', 'CHATTY'],
        ['analyze', '--scene', 'no/such/scene.json'],
    ])
    def test_usage_errors(self, argv, capsys):
        assert main(argv) == EXIT_USAGE
        assert capsys.readouterr().err.startswith("error:")

    def test_argparse_errors(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(['analyze'])
        assert info.value.code == EXIT_USAGE

    def test_scene_level_numerical_failure(self, tmp_path, capsys):
        path = tmp_path / "outside.json"
        path.write_text(json.dumps({
            'dimension': 2,
            'coordinates': ['t', 'x'],
            'metric': [['-1', '0'], [None, '1']],
            'flow': ['1', '2'],
            'domain': {'min': [0.0, 0.0], 'max': [1.0, 1.0]},
        }))
        assert main(['analyze', '--scene', str(path), '--points', 'random:3']) == EXIT_NUMERICAL
        assert "numerical failure" in capsys.readouterr().err


class TestModels:
    def test_json_listing(self, capsys):
        assert main(['models', '--format', 'json']) == EXIT_OK
        listing = json.loads(capsys.readouterr().out)
        names = [d['name'] for d in listing]
        assert 'anti_de_sitter' in names and 'rotating' in names

    def test_text_listing(self, capsys):
        assert main(['models']) == EXIT_OK
        out = capsys.readouterr().out
        assert 'fermi_rigid' in out
        assert 'omega=0.5' in out
