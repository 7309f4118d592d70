import json

import numpy as np
import pytest

from jcrevival.cli import (
    CSV_HEADER,
    EXIT_CONFIG,
    EXIT_OK,
    PRESETS,
    main,
    read_csv,
    write_csv,
)
from jcrevival.scan import COLUMNS, ScanConfig, run_scan


def run_cli(*argv):
    return main(list(argv))


def scan_args(out, extra=()):
    return ("scan", "--alpha", "1.5", "--tau-end", "8", "--steps", "17",
            "--methods", "exact,series", "--out", str(out), *extra)


def test_scan_writes_csv_and_manifest(tmp_path):
    out = tmp_path / "scan.csv"
    assert run_cli(*scan_args(out)) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 18
    manifest = json.loads((tmp_path / "scan.csv.manifest.json").read_text())
    assert manifest["config"]["alpha"] == 1.5
    assert manifest["config"]["methods"] == ["exact", "series"]
    assert manifest["n_max"] >= 4
    assert manifest["wall_time_s"] >= 0.0
    assert "--alpha" in manifest["argv"]


def test_absent_columns_are_empty_fields(tmp_path):
    out = tmp_path / "scan.csv"
    run_cli(*scan_args(out))
    row = out.read_text().splitlines()[1].split(",")
    cols = dict(zip(("tau",) + COLUMNS, row))
    assert cols["C_xproj"] == ""
    assert cols["C_analytic"] == ""
    assert float(cols["C_exact"]) == pytest.approx(1.0, abs=1e-9)


def test_csv_round_trip(tmp_path):
    config = ScanConfig(alpha=1.5, tau_start=0.0, tau_end=8.0, steps=17,
                        methods=("exact", "series"))
    series = run_scan(config)
    path = tmp_path / "direct.csv"
    write_csv(series, str(path))
    back = read_csv(str(path))
    assert np.array_equal(back.tau, series.tau)
    for name in COLUMNS:
        a, b = series.column(name), back.column(name)
        assert np.array_equal(np.isnan(a), np.isnan(b))
        assert np.array_equal(a[~np.isnan(a)], b[~np.isnan(b)])


def test_read_csv_rejects_foreign_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("time,value\n0,1\n")
    with pytest.raises(ValueError):
        read_csv(str(path))


def test_json_format(tmp_path):
    out = tmp_path / "scan.json"
    assert run_cli(*scan_args(out, extra=("--format", "json"))) == EXIT_OK
    payload = json.loads(out.read_text())
    assert payload["metadata"]["alpha"] == 1.5
    assert len(payload["rows"]) == 17
    assert payload["rows"][0]["C_analytic"] is None
    assert payload["rows"][0]["C_exact"] == pytest.approx(1.0, abs=1e-9)


def test_scan_config_error_exit_code(tmp_path):
    out = tmp_path / "x.csv"
    code = run_cli("scan", "--alpha", "1.0", "--tau-end", "5",
                   "--steps", "1", "--out", str(out))
    assert code == EXIT_CONFIG
    assert not out.exists()


def test_unknown_method_exit_code(tmp_path):
    code = run_cli("scan", "--alpha", "1.0", "--tau-end", "5", "--steps", "10",
                   "--methods", "exact,magic", "--out", str(tmp_path / "x.csv"))
    assert code == EXIT_CONFIG


def test_report_from_scan(tmp_path):
    csv_path = tmp_path / "sweep.csv"
    run_cli("scan", "--alpha", "5", "--tau-end", "60", "--steps", "601",
            "--methods", "analytic", "--out", str(csv_path))
    report_path = tmp_path / "sweep.report.json"
    code = run_cli("report", "--in", str(csv_path), "--out", str(report_path),
                   "--column", "C_analytic")
    assert code == EXIT_OK
    report = json.loads(report_path.read_text())
    assert report["alpha"] == 5.0
    ks = [p["k"] for p in report["peaks"]]
    assert 1 in ks


def test_report_alpha_override_without_manifest(tmp_path):
    csv_path = tmp_path / "sweep.csv"
    run_cli("scan", "--alpha", "5", "--tau-end", "60", "--steps", "601",
            "--methods", "analytic", "--out", str(csv_path))
    (tmp_path / "sweep.csv.manifest.json").unlink()
    report_path = tmp_path / "r.json"
    code = run_cli("report", "--in", str(csv_path), "--out", str(report_path),
                   "--column", "C_analytic", "--alpha", "5")
    assert code == EXIT_OK
    report = json.loads(report_path.read_text())
    assert report["alpha"] == 5.0


def test_report_missing_input_exit_code(tmp_path):
    code = run_cli("report", "--in", str(tmp_path / "nope.csv"),
                   "--out", str(tmp_path / "r.json"))
    assert code == EXIT_CONFIG


def test_report_uncomputed_column_exit_code(tmp_path):
    csv_path = tmp_path / "sweep.csv"
    run_cli("scan", "--alpha", "5", "--tau-end", "60", "--steps", "601",
            "--methods", "analytic", "--out", str(csv_path))
    code = run_cli("report", "--in", str(csv_path),
                   "--out", str(tmp_path / "r.json"), "--column", "C_exact")
    assert code == EXIT_CONFIG


def test_unknown_preset_exit_code(tmp_path):
    assert run_cli("preset", "nosuch", "--out-dir", str(tmp_path)) == EXIT_CONFIG


def test_preset_table_is_well_formed():
    assert set(PRESETS) == {"fig1", "fig2", "fig3a", "fig3b"}
    for config in PRESETS.values():
        # every preset must itself be a valid configuration
        ScanConfig(**config.__dict__)
    assert PRESETS["fig2"].tau_start < 20 * np.pi < PRESETS["fig2"].tau_end
    assert PRESETS["fig3a"].alpha == 5.0
    assert PRESETS["fig3b"].alpha == 6.0


def test_help_exits_zero():
    assert run_cli("--help") == EXIT_OK
