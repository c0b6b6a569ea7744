# tests/test_config.py
"""
Tests for the config module.
"""
import os
from unittest.mock import patch

import pytest

from agq.codes import CodeParameterError
from agq.codes.distance import DEFAULT_BUDGET
from agq.config import Command, RunConfig, Settings, load_settings, parse_m_range, resolve_e
from agq.curves import CurveKind, CurveParameterError
from agq.field import UnsupportedFieldError


class TestSettings:
    """Test the Settings dataclass."""

    def test_default_values(self):
        with patch.dict(os.environ, {}, clear=True):
            settings = Settings()

            assert settings.seed == 0
            assert not settings.seed_from_env
            assert settings.budget == DEFAULT_BUDGET
            assert settings.workers == 1
            assert settings.trials == 100
            assert settings.isd_level == 2
            assert settings.log_level == "WARNING"

    def test_environment_variable_loading(self):
        env_vars = {
            "AGQ_SEED": "7",
            "AGQ_BUDGET": "0x1000",
            "AGQ_WORKERS": "4",
            "AGQ_TRIALS": "25",
            "AGQ_ISD_LEVEL": "3",
            "AGQ_LOG_LEVEL": "debug",
        }

        with patch.dict(os.environ, env_vars, clear=True):
            settings = Settings()

            assert settings.seed == 7
            assert settings.seed_from_env
            assert settings.budget == 4096
            assert settings.workers == 4
            assert settings.trials == 25
            assert settings.isd_level == 3
            assert settings.log_level == "DEBUG"

    def test_blank_values_fall_back_to_defaults(self):
        with patch.dict(os.environ, {"AGQ_SEED": " ", "AGQ_WORKERS": ""}, clear=True):
            settings = Settings()

            assert settings.seed == 0
            assert not settings.seed_from_env
            assert settings.workers == 1

    def test_non_integer_value(self):
        with patch.dict(os.environ, {"AGQ_BUDGET": "lots"}, clear=True):
            with pytest.raises(ValueError) as exc_info:
                Settings()

        assert "AGQ_BUDGET" in str(exc_info.value)

    def test_validation_success(self):
        with patch.dict(os.environ, {}, clear=True):
            Settings().validate()

    @pytest.mark.parametrize(
        ("attr", "value", "name"),
        [
            ("seed", -1, "AGQ_SEED"),
            ("budget", 0, "AGQ_BUDGET"),
            ("workers", 0, "AGQ_WORKERS"),
            ("trials", -5, "AGQ_TRIALS"),
            ("isd_level", 0, "AGQ_ISD_LEVEL"),
            ("log_level", "LOUD", "AGQ_LOG_LEVEL"),
        ],
    )
    def test_validation_errors(self, attr, value, name):
        with patch.dict(os.environ, {}, clear=True):
            settings = Settings()
        setattr(settings, attr, value)

        with pytest.raises(ValueError) as exc_info:
            settings.validate()

        assert name in str(exc_info.value)


class TestLoadSettings:
    """load_dotenv writes os.environ directly, so each test restores it with patch.dict."""

    def test_reads_dotenv_in_working_directory(self, clean_env, tmp_path):
        (tmp_path / ".env").write_text("AGQ_TRIALS=12\nAGQ_SEED=3\n")
        clean_env.chdir(tmp_path)

        with patch.dict(os.environ):
            settings = load_settings()

        assert settings.trials == 12
        assert settings.seed == 3
        assert settings.seed_from_env

    def test_environment_wins_over_dotenv(self, clean_env, tmp_path):
        (tmp_path / ".env").write_text("AGQ_TRIALS=12\n")
        clean_env.chdir(tmp_path)
        clean_env.setenv("AGQ_TRIALS", "40")

        with patch.dict(os.environ):
            assert load_settings().trials == 40

    def test_invalid_dotenv_value(self, clean_env, tmp_path):
        (tmp_path / ".env").write_text("AGQ_WORKERS=0\n")
        clean_env.chdir(tmp_path)

        with patch.dict(os.environ), pytest.raises(ValueError):
            load_settings()


class TestParsing:
    def test_single_m(self):
        assert parse_m_range("5") == range(5, 6)

    def test_inclusive_range(self):
        assert parse_m_range("3..6") == range(3, 7)
        assert parse_m_range(" 2 .. 2 ") == range(2, 3)

    @pytest.mark.parametrize("text", ["", "a", "3-6", "6..3", "-1", "1..", "..4"])
    def test_bad_ranges(self, text):
        with pytest.raises(ValueError):
            parse_m_range(text)

    def test_resolve_e(self):
        assert resolve_e(8, None) == 3
        assert resolve_e(None, 2) == 2

    def test_resolve_e_needs_exactly_one(self):
        with pytest.raises(ValueError):
            resolve_e(None, None)
        with pytest.raises(ValueError):
            resolve_e(4, 2)

    def test_resolve_e_rejects_non_powers(self):
        with pytest.raises(UnsupportedFieldError):
            resolve_e(6, None)


class TestRunConfig:
    def test_q(self):
        assert RunConfig(Command.SCAN, CurveKind.A, 2, range(0, 7)).q == 4
        assert RunConfig(Command.TABLE).q is None

    def test_valid(self):
        RunConfig(Command.CONSTRUCT, CurveKind.A, 2, range(3, 7)).validate()
        RunConfig(Command.TABLE).validate()

    def test_needs_curve_and_m(self):
        with pytest.raises(ValueError):
            RunConfig(Command.VERIFY, None, 2, range(3, 4)).validate()
        with pytest.raises(ValueError):
            RunConfig(Command.VERIFY, CurveKind.A, 2, None).validate()

    def test_m_beyond_length(self):
        with pytest.raises(CodeParameterError):
            RunConfig(Command.CONSTRUCT, CurveKind.A, 1, range(0, 9)).validate()

    def test_curve_b_even_e(self):
        with pytest.raises(CurveParameterError):
            RunConfig(Command.CONSTRUCT, CurveKind.B, 2, range(0, 1)).validate()

    def test_unsupported_field(self):
        with pytest.raises(UnsupportedFieldError):
            RunConfig(Command.CONSTRUCT, CurveKind.A, 7, range(0, 1)).validate()

    @pytest.mark.parametrize("field", ["budget", "workers", "isd_level"])
    def test_positive_limits(self, field):
        config = RunConfig(Command.TABLE, **{field: 0})
        with pytest.raises(ValueError):
            config.validate()
