"""
Tests for configuration system.
"""

import json
import os
from unittest.mock import patch

import pytest

from syzygy_python.algebra.fields import FieldSpec
from syzygy_python.config.builder import CommandBuilder
from syzygy_python.config.settings import SyzygySettings


@pytest.mark.unit
class TestSyzygySettings:
    """Test the SyzygySettings class."""

    def test_settings_creation(self):
        """Test the defaults."""
        settings = SyzygySettings()

        assert settings.default_field == "fp:32003"
        assert settings.default_seed == 0
        assert settings.verify_resolutions is True
        assert settings.default_format == "grid"
        assert settings.field_spec() == FieldSpec.prime()

    def test_settings_from_env(self, env_vars_syzygy):
        """Test loading settings from environment variables."""
        settings = SyzygySettings.from_env()

        assert settings.default_field == "fp:101"
        assert settings.default_seed == 3
        assert settings.degree_bound == 4
        assert settings.verify_resolutions is False
        assert settings.parallel_jobs == 2

    @patch.dict(os.environ, {"SYZYGY_VERIFY_RESOLUTIONS": "yes", "SYZYGY_TIMEOUT": "12.5"})
    def test_settings_from_env_parsing(self):
        """Booleans accept yes, timeouts parse as floats."""
        settings = SyzygySettings.from_env()

        assert settings.verify_resolutions is True
        assert settings.timeout_seconds == 12.5
        assert settings.degree_bound is None

    def test_settings_from_json_file(self, temp_config_file):
        """Test loading settings from a JSON file."""
        settings = SyzygySettings.from_file(temp_config_file)

        assert settings.field_spec().is_rational
        assert settings.default_seed == 7
        assert settings.default_format == "kv"
        assert settings.timeout_seconds == 30

    def test_settings_from_yaml_file(self, tmp_path):
        """Test loading settings from a YAML file."""
        pytest.importorskip("yaml")
        config_file = tmp_path / "syzygy.yaml"
        config_file.write_text("default_field: fp:101\nparallel_jobs: 3\n")

        settings = SyzygySettings.from_file(config_file)

        assert settings.default_field == "fp:101"
        assert settings.parallel_jobs == 3

    def test_settings_missing_file(self, tmp_path):
        """A missing configuration file is an error."""
        with pytest.raises(FileNotFoundError):
            SyzygySettings.from_file(tmp_path / "missing.json")

    def test_settings_from_dict_ignores_unknown(self):
        """Unknown keys are skipped."""
        settings = SyzygySettings.from_dict({"default_seed": 5, "colour": "blue"})

        assert settings.default_seed == 5
        assert not hasattr(settings, "colour")

    def test_settings_validation_valid(self):
        """Defaults validate."""
        assert SyzygySettings().validate() is True

    @pytest.mark.parametrize("overrides", [
        {"default_field": "fp:100"},
        {"default_seed": -1},
        {"default_format": "json"},
        {"timeout_seconds": 0},
        {"degree_bound": 0},
        {"parallel_jobs": 0},
    ])
    def test_settings_validation_invalid(self, overrides):
        """Each out-of-range value fails validation."""
        assert SyzygySettings.from_dict(overrides).validate() is False

    def test_settings_save_and_load(self, tmp_path):
        """Saved settings load back unchanged."""
        settings = SyzygySettings(default_field="qq", default_seed=11, degree_bound=5)
        path = tmp_path / "nested" / "settings.json"

        settings.save_to_file(path)

        assert json.loads(path.read_text())["default_seed"] == 11
        assert SyzygySettings.from_file(path) == settings


@pytest.mark.unit
class TestCommandBuilder:
    """Test the CommandBuilder class."""

    def test_builder_basic(self):
        """Test building a command."""
        command = (CommandBuilder()
                   .verb("verify")
                   .target("S(3)")
                   .seed(2)
                   .option("e", 2)
                   .build())

        assert command.verb == "verify"
        assert command.target == "S(3)"
        assert command.seed == 2
        assert command.options == {"e": 2}
        assert command.field == "fp:32003"

    def test_builder_from_settings(self):
        """Settings supply field, seed, format, timeout and degree bound."""
        settings = SyzygySettings(default_field="QQ", default_seed=4, default_format="csv", degree_bound=3)

        command = CommandBuilder().from_settings(settings).verb("betti").target("S(2,2)").build()

        assert command.field == "qq"
        assert command.seed == 4
        assert command.output_format == "csv"
        assert command.degree_bound == 3

    def test_builder_invalid_verb(self):
        """Unknown verbs are rejected immediately."""
        with pytest.raises(ValueError, match="Verb must be one of"):
            CommandBuilder().verb("factor")

    def test_builder_negative_seed(self):
        """Seeds are nonnegative."""
        with pytest.raises(ValueError, match="nonnegative"):
            CommandBuilder().seed(-1)

    @pytest.mark.parametrize("configure", [
        lambda b: b.field("fp:4"),
        lambda b: b.output_format("json"),
        lambda b: b.timeout(0),
        lambda b: b.degree_bound(0),
    ])
    def test_builder_invalid_build(self, configure):
        """Invalid values surface when the command is built."""
        builder = CommandBuilder().verb("betti").target("S(3)")
        configure(builder)

        with pytest.raises(ValueError, match="Invalid command"):
            builder.build()
