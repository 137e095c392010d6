"""End-to-end command-line behavior: formats, exit codes, determinism."""

import io
import json

import numpy as np
import pytest

from spapt import classify, parse_state_file, to_density
from spapt.cli import main

INV2 = 1.0 / np.sqrt(2.0)


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_state(tmp_path, doc, name="state.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


class TestClassifyCommand:
    def test_ghz_report(self, tmp_path, capsys):
        path = write_state(tmp_path, {"catalog": {"name": "ghz", "params": [INV2, INV2]}})
        code, out, _ = run_cli(["classify", path], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["verdict"]["kind"] == "genuine-entangled"
        assert report["verdict"]["necessity_caveat"] is True
        assert report["spa_min"]["max"] == pytest.approx(0.0, abs=1e-10)
        assert report["threshold"] == pytest.approx(0.1)
        assert len(report["pt_spectra"]["B"]) == 8

    def test_kye_report_value(self, tmp_path, capsys):
        path = write_state(tmp_path, {"catalog": {"name": "kye", "params": [4]}})
        code, out, _ = run_cli(["classify", path], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["verdict"]["kind"] == "fully-separable"
        assert report["spa_min"]["max"] == pytest.approx(0.11, abs=1e-12)

    def test_report_round_trips(self, tmp_path, capsys):
        doc = {
            "mix": {
                "parts": [
                    {"weight": 0.6, "state": {"catalog": {"name": "g2"}}},
                    {"weight": 0.4, "state": {"pure": {"amplitudes": [1, 0, 0, 0, 0, 0, 0, 0]}}},
                ]
            }
        }
        path = write_state(tmp_path, doc)
        code, out, _ = run_cli(["classify", path], capsys)
        assert code == 0
        report = json.loads(out)
        echoed = parse_state_file(json.dumps(report["input"]))
        again = classify(to_density(echoed))
        assert again.kind == report["verdict"]["kind"]
        assert list(again.cuts) == report["verdict"]["cuts"]
        assert again.margin == pytest.approx(report["verdict"]["margin"], abs=1e-12)

    def test_single_cut_restriction(self, tmp_path, capsys):
        path = write_state(tmp_path, {"catalog": {"name": "b1", "params": [0.3]}})
        code, out, _ = run_cli(["classify", path, "--qubit", "A"], capsys)
        report = json.loads(out)
        assert code == 0
        assert report["verdict"] is None
        assert report["cut_check"] is True
        assert set(report["pt_spectra"]) == {"A"}

    def test_custom_weight_scales_threshold(self, tmp_path, capsys):
        path = write_state(tmp_path, {"catalog": {"name": "ghz", "params": [INV2, INV2]}})
        code, out, _ = run_cli(["classify", path, "--p", "0.9"], capsys)
        report = json.loads(out)
        assert code == 0
        assert report["threshold"] == pytest.approx(0.9 / 8)
        # affine law: 0.9/8 + 0.1 * (-1/2)
        assert report["spa_min"]["max"] == pytest.approx(0.9 / 8 - 0.05, abs=1e-12)
        assert report["verdict"]["kind"] == "genuine-entangled"

    def test_tangle_flag(self, tmp_path, capsys):
        path = write_state(tmp_path, {"catalog": {"name": "ghz", "params": [INV2, INV2]}})
        code, out, _ = run_cli(["classify", path, "--tangle"], capsys)
        assert json.loads(out)["tangle"] == pytest.approx(1.0, abs=1e-12)

    def test_tangle_flag_rejects_mixed_states(self, tmp_path, capsys):
        path = write_state(tmp_path, {"catalog": {"name": "b1", "params": [0.3]}})
        code, _, err = run_cli(["classify", path, "--tangle"], capsys)
        assert code == 2
        assert "pure" in err

    def test_pretty_output(self, tmp_path, capsys):
        path = write_state(tmp_path, {"catalog": {"name": "kye", "params": [4]}})
        code, out, _ = run_cli(["classify", path, "--pretty"], capsys)
        assert code == 0
        assert "verdict: fully-separable" in out
        assert "0.11" in out

    def test_malformed_file_exits_2(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("not json", encoding="utf-8")
        code, _, err = run_cli(["classify", str(path)], capsys)
        assert code == 2
        assert "error" in err

    def test_schema_diagnostic_names_path(self, tmp_path, capsys):
        path = write_state(tmp_path, {"pure": {"amplitudes": [1, 0, 0, "x", 0, 0, 0, 0]}})
        code, _, err = run_cli(["classify", str(path)], capsys)
        assert code == 2
        assert "amplitudes[3]" in err

    def test_bad_weights_exit_2(self, tmp_path, capsys):
        doc = {"mix": {"parts": [
            {"weight": 0.5, "state": {"catalog": {"name": "g2"}}},
            {"weight": 0.4, "state": {"catalog": {"name": "wtilde"}}},
        ]}}
        code, _, err = run_cli(["classify", write_state(tmp_path, doc)], capsys)
        assert code == 2

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run_cli(["classify", "/nonexistent/state.json"], capsys)
        assert code == 2

    def test_rounded_catalog_parameters_accepted(self, tmp_path, capsys):
        path = write_state(tmp_path, {"catalog": {"name": "ghz", "params": [0.7071, 0.7071]}})
        code, out, _ = run_cli(["classify", path], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["verdict"]["kind"] == "genuine-entangled"
        assert abs(report["spa_min"]["max"]) <= 1e-10

    def test_numerical_failure_exits_1(self, tmp_path, capsys, monkeypatch):
        from spapt.errors import NumericalFailure

        def boom(*args, **kwargs):
            raise NumericalFailure("synthetic")

        monkeypatch.setattr("spapt.cli.hermitian_eigenvalues", boom)
        path = write_state(tmp_path, {"catalog": {"name": "g2"}})
        code, _, err = run_cli(["classify", path], capsys)
        assert code == 1
        assert "numerical failure" in err


class TestReproduceCommand:
    def test_table2_verdicts_all_c_cut(self, capsys):
        code, out, _ = run_cli(["reproduce", "table2"], capsys)
        assert code == 0
        rows = out.strip().split("\n")[1:]
        assert len(rows) == 4
        for row in rows:
            assert row.endswith("biseparable:C-AB")
            assert float(row.split(",")[11]) <= 1e-3  # delta_max column

    def test_table1_deltas_within_tolerance(self, capsys):
        code, out, _ = run_cli(["reproduce", "table1"], capsys)
        rows = out.strip().split("\n")[1:]
        assert len(rows) == 5
        for row in rows:
            cells = row.split(",")
            assert float(cells[11]) <= 1e-3
            assert cells[12] == "genuine-entangled"

    def test_examples_cover_all_families(self, capsys):
        code, out, _ = run_cli(["reproduce", "examples"], capsys)
        assert code == 0
        names = [row.split(",")[0] for row in out.strip().split("\n")[1:]]
        assert names == ["g1", "g2", "g3", "ghz-w", "b1", "b2", "kye", "s2", "s3", "rho1", "rho2"]

    def test_byte_stable(self, capsys):
        _, first, _ = run_cli(["reproduce", "table1"], capsys)
        _, second, _ = run_cli(["reproduce", "table1"], capsys)
        assert first == second
        assert "\r" not in first  # LF only


class TestScanCommand:
    def test_rho1_endpoints(self, capsys):
        code, out, _ = run_cli(["scan", "rho1", "--grid", "q=0,1"], capsys)
        assert code == 0
        rows = out.strip().split("\n")
        assert rows[0] == "q,lam_a,lam_b,lam_c,lam_max,verdict"
        first, last = rows[1].split(","), rows[2].split(",")
        assert abs(float(first[4])) <= 1e-10 and first[5] == "genuine-entangled"
        assert float(last[4]) == pytest.approx(0.1, abs=1e-12)
        assert last[5] == "fully-separable"

    def test_ghz_w_matches_closed_form(self, capsys):
        code, out, _ = run_cli(["scan", "ghz-w", "--grid", "q=0:1:3"], capsys)
        assert code == 0
        for row in out.strip().split("\n")[1:]:
            cells = row.split(",")
            q = float(cells[0])
            q1 = (4 - q - np.sqrt(1 - 2 * q + 10 * q * q)) / 30
            q2 = (6 + 3 * q - np.sqrt(32 - 64 * q + 41 * q * q)) / 60
            assert float(cells[4]) == pytest.approx(min(q1, q2), abs=1e-9)

    def test_grid_out_of_range_exits_2(self, capsys):
        code, _, err = run_cli(["scan", "b1", "--grid", "q=0:2:5"], capsys)
        assert code == 2
        assert "outside" in err

    def test_unknown_family_exits_2(self, capsys):
        code, _, err = run_cli(["scan", "mystery", "--grid", "q=0:1:3"], capsys)
        assert code == 2

    def test_missing_grid_exits_2(self, capsys):
        code, _, err = run_cli(["scan", "rho2", "--grid", "q1=0.5"], capsys)
        assert code == 2
        assert "q2" in err

    def test_tangle_column_for_pure_family(self, capsys):
        code, out, _ = run_cli(
            ["scan", "ghz", "--grid", f"alpha={INV2}", "--grid", f"beta={INV2}", "--tangle"],
            capsys,
        )
        assert code == 0
        rows = out.strip().split("\n")
        assert rows[0].endswith(",tau")
        assert float(rows[1].split(",")[-1]) == pytest.approx(1.0, abs=1e-12)

    def test_tangle_on_mixed_family_exits_2(self, capsys):
        code, _, err = run_cli(["scan", "s2", "--grid", "alpha=0.5", "--tangle"], capsys)
        assert code == 2

    def test_deterministic_row_order(self, capsys):
        _, first, _ = run_cli(
            ["scan", "rho2", "--grid", "q1=0.5:0.7:2", "--grid", "q2=0.1:0.2:2"], capsys
        )
        _, second, _ = run_cli(
            ["scan", "rho2", "--grid", "q1=0.5:0.7:2", "--grid", "q2=0.1:0.2:2"], capsys
        )
        assert first == second
        body = first.strip().split("\n")[1:]
        assert [row.split(",")[0] for row in body] == ["0.5", "0.5", "0.7", "0.7"]


def test_stdin_input(tmp_path, capsys, monkeypatch):
    doc = json.dumps({"catalog": {"name": "s3", "params": [0.5]}})
    monkeypatch.setattr("sys.stdin", io.StringIO(doc))
    code, out, _ = run_cli(["classify", "-"], capsys)
    assert code == 0
    assert json.loads(out)["verdict"]["kind"] == "fully-separable"
