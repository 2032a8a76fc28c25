import logging

import numpy as np
import pytest

from src.utils import (
    DEFAULT_TOLERANCES, Tolerances, load_config, setup_logger, validate_box, validate_params,
    validate_point, validate_square,
)
from src.utils.errors import ParamOutOfRange, SchemaError


class TestConfig:
    def test_packaged_defaults(self):
        config = load_config()
        assert config['sampling'] == {'kind': 'random', 'count': 50, 'seed': 42}
        assert config['logging']['level'] == 'WARNING'
        assert Tolerances.from_config(config) == DEFAULT_TOLERANCES

    def test_user_file_is_merged(self, tmp_path):
        path = tmp_path / "tight.yaml"
        path.write_text("tolerances:\n  verdict: 1.0e-3\nsampling:\n  seed: 9\n", encoding='utf-8')
        config = load_config(str(path))
        tolerances = Tolerances.from_config(config)
        assert tolerances.verdict == 1e-3
        assert tolerances.rotation == DEFAULT_TOLERANCES.rotation
        assert config['sampling']['seed'] == 9
        assert config['sampling']['count'] == 50

    def test_missing_file(self, tmp_path):
        with pytest.raises(SchemaError) as info:
            load_config(str(tmp_path / "absent.yaml"))
        assert info.value.field == 'config'

    @pytest.mark.parametrize("text", ["tolerances: [1, 2\n", "- a\n- b\n"])
    def test_bad_files(self, tmp_path, text):
        path = tmp_path / "bad.yaml"
        path.write_text(text, encoding='utf-8')
        with pytest.raises(SchemaError):
            load_config(str(path))

    def test_unknown_tolerance(self):
        with pytest.raises(SchemaError) as info:
            Tolerances.from_config({'tolerances': {'loose': 1.0}})
        assert info.value.field == 'tolerances'

    def test_non_positive_tolerance(self):
        with pytest.raises(SchemaError) as info:
            Tolerances.from_config({'numerics': {'timelike': 0.0}})
        assert info.value.field == 'timelike'

    def test_with_verdict(self):
        assert DEFAULT_TOLERANCES.with_verdict(None) is DEFAULT_TOLERANCES
        assert DEFAULT_TOLERANCES.with_verdict(1e-4).verdict == 1e-4
        assert DEFAULT_TOLERANCES.verdict == 1e-6
        with pytest.raises(SchemaError):
            DEFAULT_TOLERANCES.with_verdict(-1.0)


class TestLogger:
    def test_level_and_handlers(self, tmp_path):
        logger = setup_logger("rigidflow.test", "debug", log_file=str(tmp_path / "run.log"))
        assert logger.level == logging.DEBUG
        assert len(logger.handlers) == 2
        logger = setup_logger("rigidflow.test", "ERROR")
        assert logger.level == logging.ERROR
        assert len(logger.handlers) == 1

    def test_unknown_level(self):
        with pytest.raises(SchemaError) as info:
            setup_logger("rigidflow.test", "CHATTY")
        assert info.value.field == 'log-level'


class TestValidators:
    def test_point(self):
        np.testing.assert_array_equal(validate_point([0, 1], 2), [0.0, 1.0])
        with pytest.raises(SchemaError):
            validate_point([0, 1, 2], 2)
        with pytest.raises(SchemaError):
            validate_point([0, np.nan], 2)

    def test_box(self):
        validate_box([0, 0], [0, 1], 2)
        with pytest.raises(SchemaError) as info:
            validate_box([0, 2], [1, 1], 2)
        assert info.value.field == 'domain'

    def test_square(self):
        validate_square(np.zeros((3, 3)))
        with pytest.raises(ValueError):
            validate_square(np.zeros((2, 3)), "M")

    def test_params(self):
        ranges = {'omega': (-2.0, 2.0)}
        validate_params({'omega': 2.0}, ranges)
        with pytest.raises(ParamOutOfRange) as info:
            validate_params({'omega': 2.5}, ranges)
        assert info.value.name == 'omega'
        with pytest.raises(ParamOutOfRange):
            validate_params({'speed': 1.0}, ranges)
