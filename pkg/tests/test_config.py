"""Tests for configuration loading, the console logger and the report store."""

from __future__ import annotations

import io
import json

import pytest

from gfkit.domain.errors import ConfigError
from gfkit.domain.reports import Scale
from gfkit.infrastructure.config import GfkitConfig, load_config
from gfkit.infrastructure.logger import ConsoleLogger
from gfkit.infrastructure.report_store import JsonReportStore


# ---------------------------------------------------------------------------
# load_config
# ---------------------------------------------------------------------------
class TestLoadConfig:
    def test_defaults(self, clean_env):
        config = load_config()
        assert config == GfkitConfig()
        assert config.output_format == "text"
        assert config.dps == 60
        assert config.scale is None
        assert config.report_dir is None

    def test_scale(self, clean_env, monkeypatch):
        monkeypatch.setenv("GFKIT_SCALE", "Small")
        assert load_config().scale is Scale.SMALL

    def test_bad_scale(self, clean_env, monkeypatch):
        monkeypatch.setenv("GFKIT_SCALE", "huge")
        with pytest.raises(ConfigError, match="GFKIT_SCALE"):
            load_config()

    @pytest.mark.parametrize("raw, expected", [("1", True), ("true", True), ("0", False), ("off", False)])
    def test_verbose(self, clean_env, monkeypatch, raw, expected):
        monkeypatch.setenv("GFKIT_VERBOSE", raw)
        assert load_config().verbose is expected

    def test_bad_verbose(self, clean_env, monkeypatch):
        monkeypatch.setenv("GFKIT_VERBOSE", "maybe")
        with pytest.raises(ConfigError, match="GFKIT_VERBOSE must be 0 or 1"):
            load_config()

    @pytest.mark.parametrize("raw", ["10", "abc"])
    def test_bad_dps(self, clean_env, monkeypatch, raw):
        monkeypatch.setenv("GFKIT_DPS", raw)
        with pytest.raises(ConfigError, match="GFKIT_DPS"):
            load_config()

    def test_dps(self, clean_env, monkeypatch):
        monkeypatch.setenv("GFKIT_DPS", "100")
        assert load_config().dps == 100

    def test_bad_format(self, clean_env, monkeypatch):
        monkeypatch.setenv("GFKIT_FORMAT", "xml")
        with pytest.raises(ConfigError, match="GFKIT_FORMAT"):
            load_config()

    def test_report_dir(self, clean_env, monkeypatch):
        monkeypatch.setenv("GFKIT_REPORT_DIR", "/tmp/reports")
        assert load_config().report_dir == "/tmp/reports"

    def test_dotenv_found_above_cwd(self, clean_env, monkeypatch):
        (clean_env / ".env").write_text("GFKIT_FORMAT=json\n", encoding="utf-8")
        nested = clean_env / "a" / "b"
        nested.mkdir(parents=True)
        monkeypatch.chdir(nested)
        assert load_config().output_format == "json"

    def test_environment_wins_over_dotenv(self, clean_env, monkeypatch):
        (clean_env / ".env").write_text("GFKIT_FORMAT=json\n", encoding="utf-8")
        monkeypatch.setenv("GFKIT_FORMAT", "series")
        assert load_config().output_format == "series"

    def test_explicit_env_path(self, clean_env):
        path = clean_env / "custom.env"
        path.write_text("GFKIT_SCALE=default\n", encoding="utf-8")
        assert load_config(str(path)).scale is Scale.DEFAULT


# ---------------------------------------------------------------------------
# ConsoleLogger
# ---------------------------------------------------------------------------
class TestConsoleLogger:
    def test_writes_to_stderr(self, capsys):
        ConsoleLogger().info("Suite passed", suite="dyck_area", checks=2)
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err == "[INFO] Suite passed (suite=dyck_area checks=2)\n"

    def test_debug_needs_verbose(self, capsys):
        ConsoleLogger().debug("hidden")
        ConsoleLogger(verbose=True).debug("shown")
        assert capsys.readouterr().err == "[DEBUG] shown\n"

    def test_long_values_are_shortened(self):
        stream = io.StringIO()
        ConsoleLogger(stream=stream).warn("Suite failed", coefficients=list(range(100)), relation="a" * 80)
        line = stream.getvalue()
        assert "coefficients=[100 items]" in line
        assert "relation=" + "a" * 57 + "..." in line
        assert line.count("\n") == 1


# ---------------------------------------------------------------------------
# JsonReportStore
# ---------------------------------------------------------------------------
class TestJsonReportStore:
    def test_default_name(self, tmp_path):
        path = JsonReportStore(str(tmp_path / "r")).save_report({"pass": True})
        assert path == str(tmp_path / "r" / "corpus-report.json")
        assert json.loads((tmp_path / "r" / "corpus-report.json").read_text()) == {"pass": True}

    def test_explicit_path_without_directory(self, tmp_path):
        target = tmp_path / "x" / "y.json"
        assert JsonReportStore().save_report({}, str(target)) == str(target)
        assert target.read_text() == "{}\n"

    def test_nowhere_to_save(self):
        with pytest.raises(ConfigError):
            JsonReportStore().save_report({})
