import json
import os

import pytest

from app.config import REPORT_DIR
from app.scalars import field_preset
from app.quadratic import component_dims
from app.heckesym import SymmetryFileError, ext_relations
from app.harness import (
    CheckConfig,
    ConfigError,
    dims_report,
    emit_report,
    hecke_battery,
    homdim_report,
    load_symmetry,
    mackey_report,
    parse_builtin,
    report_path,
    report_text,
    run_suite,
    save_symmetry,
)

COUNTEREXAMPLE_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "symmetries", "counterexample.json")


class TestConfig:
    """Проверка параметров запуска"""

    @pytest.mark.parametrize("kwargs", [
        {"checks": ("nope",)},
        {"symmetries": ("one_dim",) * 4},
        {"nmax": -1},
        {"nmax": 1, "checks": ("koszul",)},
        {"symmetries": (), "checks": ("relations",)},
        {"jobs": 0},
        {"suite_nmax": 0},
    ])
    def test_rejected(self, field_two, kwargs):
        params = {"symmetries": ("drinfeld_jimbo:2",), "field": field_two, "nmax": 3, "checks": ("relations",)}
        params.update(kwargs)
        with pytest.raises(ConfigError):
            CheckConfig(**params).validate()

    def test_suite_needs_no_symmetry(self, field_two):
        CheckConfig((), field_two, 0, ("hecke-suite",)).validate()

    def test_describe_omits_jobs(self, field_two):
        described = CheckConfig(("one_dim",), field_two, 2, ("relations",), jobs=3).describe()
        assert "jobs" not in described
        assert described["symmetries"] == ["one_dim"]


class TestSymmetryFiles:
    def test_builtins(self, field_two):
        assert parse_builtin("drinfeld_jimbo:2", field_two).d == 2
        assert parse_builtin(" one_dim ", field_two).d == 1

    @pytest.mark.parametrize("text", ["nope", "drinfeld_jimbo:x", "super:1"])
    def test_bad_builtin(self, field_two, text):
        with pytest.raises(ConfigError):
            parse_builtin(text, field_two)

    def test_shipped_counterexample(self, field_two):
        sym = parse_builtin(COUNTEREXAMPLE_PATH, field_two)
        assert sym.d == 2
        assert sym.q * sym.q == -1
        assert component_dims(ext_relations(sym), 3) == [1, 2, 2, 0]

    def test_malformed_json_location(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{\n  "dim": 2,\n  "field": ,\n}\n', encoding="utf-8")
        with pytest.raises(SymmetryFileError) as error:
            load_symmetry(str(path))
        assert error.value.location.endswith(":3")

    def test_missing_file(self, tmp_path):
        with pytest.raises(SymmetryFileError):
            load_symmetry(str(tmp_path / "absent.json"))

    def test_document_errors_carry_path(self, tmp_path):
        path = tmp_path / "short.json"
        path.write_text(json.dumps({"dim": 2, "matrix": []}), encoding="utf-8")
        with pytest.raises(SymmetryFileError) as error:
            load_symmetry(str(path))
        assert error.value.location == str(path)
        assert "field" in str(error.value)

    def test_save_and_load(self, tmp_path, r2):
        path = str(tmp_path / "nested" / "r2.json")
        save_symmetry(r2, path)
        restored = load_symmetry(path)
        assert restored.R == r2.R
        assert restored.label == r2.label


class TestRunSuite:
    """Запуск проверок и отчеты"""

    def test_counterexample_breaks_duality(self, gauss):
        cfg = CheckConfig(("hietarinta_counterexample",), gauss, 4, ("hilbert-duality",))
        report = run_suite(cfg)
        unit = report.results["hilbert-duality"]["units"]["S/L"]
        assert report.exit_code == 1
        assert report.failed == ["hilbert-duality"]
        assert unit["dims"]["S"] == [1, 2, 2, 0, 0]
        assert unit["first_failing_degree"] == 4

    def test_quantum_plane_passes(self, field_two):
        checks = ("relations", "koszul", "hilbert-duality", "frobenius")
        report = run_suite(CheckConfig(("drinfeld_jimbo:2",), field_two, 3, checks))
        assert report.exit_code == 0
        assert [report.results[name]["status"] for name in checks] == ["pass"] * 4
        assert report.results["relations"]["units"]["0"]["ext_relations"] == 3

    def test_hypothesis_not_met_is_not_a_failure(self, field_two):
        report = run_suite(CheckConfig(("drinfeld_jimbo:2", "drinfeld_jimbo:2"), field_two, 3, ("frobenius",)))
        units = report.results["frobenius"]["units"]
        assert units["L"]["status"] == "pass"
        assert units["E"]["status"] == "hypothesis-not-met"
        assert report.exit_code == 0

    def test_deterministic_without_timing(self, field_two):
        cfg = CheckConfig(("drinfeld_jimbo:2",), field_two, 3, ("relations", "koszul"))
        assert report_text(run_suite(cfg), False) == report_text(run_suite(cfg), False)

    def test_parallel_matches_serial(self, field_two):
        serial = CheckConfig(("drinfeld_jimbo:2",), field_two, 3, ("koszul", "hilbert-duality"))
        parallel = CheckConfig(("drinfeld_jimbo:2",), field_two, 3, ("koszul", "hilbert-duality"), jobs=2)
        assert run_suite(parallel).canonical() == run_suite(serial).canonical()

    def test_no_checks(self, field_two):
        report = run_suite(CheckConfig(("one_dim",), field_two, 2, ()))
        assert report.results == {}
        assert report.exit_code == 0

    def test_unknown_check_raises(self, field_two):
        with pytest.raises(ConfigError):
            run_suite(CheckConfig(("one_dim",), field_two, 2, ("everything",)))

    def test_emit_report(self, tmp_path, field_two):
        report = run_suite(CheckConfig(("one_dim",), field_two, 2, ("relations",)))
        path = emit_report(report, str(tmp_path / "out" / "report.json"))
        with open(path, encoding="utf-8") as f:
            doc = json.load(f)
        assert doc["results"]["relations"]["status"] == "pass"
        assert "timing" in doc

    def test_report_path(self):
        assert report_path("run.json") == os.path.join(REPORT_DIR, "run.json")
        assert report_path(os.path.join("elsewhere", "run.json")) == os.path.join("elsewhere", "run.json")


class TestCalculators:
    def test_homdim(self, field_two):
        report = homdim_report("2,1", "3", "t", "t", field_two)
        assert report["computed"] == report["formula"] == 1

    def test_homdim_size_mismatch(self, field_two):
        with pytest.raises(ConfigError):
            homdim_report("2,1", "2", "t", "t", field_two)

    def test_mackey(self, field_two):
        report = mackey_report("2,1", "1,2", "a", field_two)
        assert report["dim"] == 3
        assert sum(len(block["basis"]) for block in report["blocks"]) == 3

    def test_dims(self, r2):
        assert dims_report(r2, "S", 4)["dims"] == [1, 2, 3, 4, 5]
        assert dims_report(r2, "L!", 3)["dims"] == [1, 2, 3, 4]

    def test_hecke_battery(self, field_two):
        result = hecke_battery(2, field_two)
        assert result["status"] == "pass"
        assert result["modules"] == 3
        assert result["failures"] == []

    @pytest.mark.slow
    @pytest.mark.parametrize("preset,q", [("Q", "2"), ("Q", "-1"), ("gauss", None)])
    def test_hecke_battery_rank_three(self, preset, q):
        result = hecke_battery(3, field_preset(preset, q))
        assert result["failures"] == []
        assert result["status"] == "pass"
        assert result["counts"]["zero-hecke-decomposition"][1] > 0
        assert result["counts"]["preimage"] == [16, 16]
