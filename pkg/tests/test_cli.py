"""Integration tests for the gfkit CLI, run in-process."""

from __future__ import annotations

import json

import pytest

from gfkit.application.corpus.suites import SUITES
from gfkit.domain.expressions import parse_polynomial
from gfkit.domain.reports import Check

FIVE_VERTEX_DET = "1 - (3 + x)*t + (1 + 3*x)*t^2 - 2*x*t^3 + (x - y)*t^4"


# ---------------------------------------------------------------------------
# Help and spec
# ---------------------------------------------------------------------------
class TestHelp:
    def test_no_command_prints_help(self, run):
        code, out, _ = run()
        assert code == 0
        assert "Commands:" in out

    def test_help_lists_commands(self, run):
        code, out, _ = run("help")
        assert code == 0
        for name in ("walks", "automaton", "guess", "corpus"):
            assert name in out

    def test_help_for_command(self, run):
        _, out, _ = run("help", "walks")
        assert "--method" in out

    def test_help_for_unknown_command(self, run):
        code, out, _ = run("help", "frobnicate")
        assert code == 0
        assert "Unknown command: frobnicate" in out

    def test_spec_is_json(self, run):
        code, out, _ = run("spec")
        assert code == 0
        spec = json.loads(out)
        assert spec["name"] == "gfkit"
        assert set(spec["exit_codes"]) == {"0", "1", "2", "3"}
        assert "corpus" in spec["commands"]


# ---------------------------------------------------------------------------
# Output formats
# ---------------------------------------------------------------------------
class TestAutomatonCommand:
    def test_text(self, run):
        code, out, err = run("automaton", "--fixture", "ccpoly", "--coeffs", "10")
        assert code == 0
        assert "coefficients: 0, 1, 2, 6, 19, 61, 196, 629, 2017, 6466" in out
        assert "input_deterministic: true" in out
        assert "[INFO] Automaton counted" in err

    def test_json(self, run):
        code, out, _ = run("automaton", "--fixture", "ccpoly", "--coeffs", "10", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["order"] == 9
        assert data["coefficients"][:4] == ["0", "1", "2", "6"]

    def test_series_format(self, run):
        _, out, _ = run("automaton", "--fixture", "ab_star", "--order", "3", "--format", "series")
        assert out == "order 3\n1\n0\n1\n0\n"

    def test_format_from_environment(self, run, monkeypatch):
        monkeypatch.setenv("GFKIT_FORMAT", "json")
        _, out, _ = run("automaton", "--fixture", "ab_star")
        assert json.loads(out)["order"] == 10

    def test_file_may_name_a_fixture(self, run):
        code, out, _ = run("automaton", "--file", "ab_star", "--order", "2", "--format", "json")
        assert code == 0
        assert json.loads(out)["coefficients"] == ["1", "0", "1"]

    def test_file(self, run, data_file):
        code, out, _ = run("automaton", "--file", data_file("ends-in-a.json"), "--determinize", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["input_deterministic"] is False
        assert data["coefficients"][:4] == ["0", "1", "2", "4"]
        assert "determinized" in data

    def test_verbose_emits_debug(self, run, data_file):
        _, _, err = run("automaton", "--file", data_file("ends-in-a.json"), "--verbose")
        assert "[DEBUG]" in err


# ---------------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------------
class TestExitCodes:
    def test_unknown_flag(self, run):
        code, _, err = run("automaton", "--bogus")
        assert code == 2
        assert err.startswith("ERROR:")

    def test_unknown_command(self, run):
        code, _, _ = run("frobnicate")
        assert code == 2

    def test_missing_file(self, run):
        code, _, err = run("automaton", "--file", "/no/such/file.json")
        assert code == 2
        assert "no such file or fixture" in err

    def test_malformed_json(self, run, data_file):
        code, _, err = run("walks", "--file", data_file("bad.json"), "--targets", "1")
        assert code == 2
        assert "bad.json:" in err

    def test_series_file_position(self, run, data_file):
        code, _, err = run("guess", "rational", "--coeffs", data_file("bad-series.txt"))
        assert code == 2
        assert "bad-series.txt:4:1:" in err

    def test_order_and_coeffs_together(self, run):
        code, _, _ = run("automaton", "--fixture", "ccpoly", "--order", "3", "--coeffs", "4")
        assert code == 2

    def test_computation_error(self, run):
        code, out, err = run("expand", "--rational", "1/t")
        assert code == 1
        assert out == ""
        assert "ERROR: not a power series" in err

    def test_bad_environment(self, run, monkeypatch):
        monkeypatch.setenv("GFKIT_VERBOSE", "maybe")
        code, _, err = run("spec")
        assert code == 2
        assert "GFKIT_VERBOSE" in err

    def test_series_format_needs_a_series(self, run, data_file):
        code, _, _ = run("det", "--file", data_file("small.matrix"), "--format", "series")
        assert code == 2

    def test_section_residue_out_of_range(self, run):
        code, out, err = run("section", "--rational", "1/(1 - t)", "--r", "2", "--p", "2")
        assert code == 2
        assert out == ""
        assert "0 <= r < p" in err


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------
class TestCommands:
    def test_det(self, run, data_file):
        code, out, _ = run("det", "--file", data_file("small.matrix"), "--format", "json")
        assert code == 0
        assert parse_polynomial(json.loads(out)["determinant"]) == parse_polynomial("1 - t^2 - x*y")

    def test_walks_viennot(self, run):
        code, out, _ = run(
            "walks", "--fixture", "five_vertex", "--targets", "2", "3", "--method", "viennot", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert parse_polynomial(data["cycle_denominator"]) == parse_polynomial(FIVE_VERTEX_DET)
        assert sorted(data["path_numerators"]) == ["2", "3"]

    def test_walks_two_cycle(self, run, data_file):
        _, out, _ = run("walks", "--file", data_file("two-cycle.json"), "--targets", "1", "--order", "4", "--format", "json")
        assert json.loads(out)["coefficients"] == ["1", "0", "1", "0", "1"]

    def test_guess_rational(self, run, data_file):
        code, out, _ = run("guess", "rational", "--coeffs", data_file("ccpoly.txt"))
        assert code == 0
        assert "degrees: 4, 3" in out
        assert "found: true" in out

    def test_guess_algebraic(self, run, data_file):
        code, out, _ = run(
            "guess", "algebraic", "--coeffs", data_file("catalan-shift.txt"), "--max-deg", "1", "2", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["found"] is True
        assert parse_polynomial(data["relation"]) == parse_polynomial("a^2 - a + t")

    def test_roots(self, run):
        _, out, _ = run("roots", "--fixture", "planar_maps", "--order", "4", "--format", "json")
        data = json.loads(out)
        assert data["branches"][0]["coefficients"] == ["1", "2", "9", "54", "378"]

    def test_verify(self, run, data_file):
        _, out, _ = run(
            "verify", "--series", data_file("catalan-shift.txt"), "--file", data_file("catalan.equation"), "--format", "json"
        )
        assert json.loads(out) == {"order": 11, "verified_to": 11, "complete": True}

    def test_series_product(self, run):
        _, out, _ = run("series", "mul", "--a", "1/(1 - t)", "--b", "1/(1 - t)", "--order", "4", "--format", "json")
        assert json.loads(out)["coefficients"] == ["1", "2", "3", "4", "5"]

    def test_catalytic(self, run, data_file):
        _, out, _ = run("catalytic", "--file", data_file("maps.catalytic"), "--order", "4", "--format", "json")
        assert json.loads(out)["coefficients"] == ["1", "2", "9", "54", "378"]

    def test_lagrange(self, run):
        _, out, _ = run("lagrange", "--phi", "(1 + x)^2", "--n", "3", "--format", "json")
        assert json.loads(out) == {"n": 3, "coefficient": "5"}

    def test_diagonal(self, run):
        _, out, _ = run("diagonal", "--function", "1/(1 - x - y)", "--order", "4", "--format", "json")
        assert json.loads(out)["coefficients"] == ["1", "2", "6", "20", "70"]


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------
class TestCorpusCommand:
    def test_list(self, run):
        code, out, _ = run("corpus", "list")
        assert code == 0
        assert "dyck_area" in out

    def test_run_small(self, run):
        code, out, _ = run("corpus", "run", "dyck_area", "--scale", "small")
        assert code == 0
        assert "PASS" in out
        assert "1/1 suites passed" in out

    def test_run_json(self, run):
        _, out, _ = run("corpus", "run", "dyck_area", "--scale", "small", "--format", "json")
        data = json.loads(out)
        assert data["pass"] is True
        assert data["suites"][0]["scale"] == "small"

    def test_scale_from_environment(self, run, monkeypatch):
        monkeypatch.setenv("GFKIT_SCALE", "small")
        _, out, _ = run("corpus", "run", "dyck_area", "--format", "json")
        assert json.loads(out)["suites"][0]["scale"] == "small"

    def test_report_dir(self, run, monkeypatch, tmp_path):
        monkeypatch.setenv("GFKIT_REPORT_DIR", str(tmp_path / "reports"))
        code, _, _ = run("corpus", "run", "dyck_area", "--scale", "small")
        assert code == 0
        assert (tmp_path / "reports" / "corpus-report.json").exists()

    def test_failing_suite_exit_code(self, run, monkeypatch):
        monkeypatch.setitem(SUITES, "always_fails", lambda scale: [Check("never", "1", "2", False)])
        code, out, _ = run("corpus", "run", "always_fails")
        assert code == 3
        assert "FAIL" in out

    def test_unknown_suite(self, run):
        code, _, _ = run("corpus", "run", "nope")
        assert code == 2

    def test_names_and_all(self, run):
        code, _, _ = run("corpus", "run", "dyck_area", "--all")
        assert code == 2
