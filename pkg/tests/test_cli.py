"""Command-line surface: reports, exit codes, search, render."""

import json
import subprocess
import sys

import pytest

from tilescope.cli import enumerate_normalized, main, run_search
from tilescope.report import analyze_digit_set, report_to_json

TWELVE = "0,1,4,8,9,17,25,33,41,72,76,80"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestAnalyze:
    def test_twelve_digit_set(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "-b", "12", "-d", TWELVE, "--json"
        )
        assert code == 0
        report = json.loads(out)
        assert report["tile"]["is_tile"] is True
        assert report["stabilization"]["m"] == 1
        assert report["decomposition"]["A"] == [0, 1, 4, 8, 9, 17]
        assert report["spectral"]["all_ok"] is True
        assert report["stopped_after"] is None

    def test_non_tile_stops_early(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "-b", "4", "-d", "0,1,2,5", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["tile"]["is_tile"] is False
        witness = report["tile"]["witness"]
        assert witness["value"] == 5 and witness["level"] == 2
        assert report["stopped_after"] == "tile_check"
        assert report["decomposition"] is None
        assert report["spectral"] is None

    def test_trivial_binary(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "-b", "2", "-d", "0,1", "--json")
        report = json.loads(out)
        assert code == 0
        assert report["stabilization"]["m"] == 1
        assert report["tiling_set"] == {
            "period": 1,
            "residues": [0],
            "density": "1",
            "self_replicating": True,
        }
        assert report["measure"] == "1"
        assert report["cyclotomic"]["full"]["spectrum"]["elements"] == ["0", "1/2"]

    def test_unnormalized_input(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "-b", "4", "-d", "2,4,18,20", "--json")
        report = json.loads(out)
        assert report["normalization"] == {
            "digits": [0, 1, 8, 9],
            "offset": 2,
            "scale": 2,
        }
        assert report["tile"]["is_tile"] is True

    def test_inconclusive_exit_code(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "-b", "4", "-d", "0,1,32,33", "--mmax", "1", "--json"
        )
        assert code == 3
        report = json.loads(out)
        assert report["stabilization"]["inconclusive"] is True
        assert report["stopped_after"] == "stabilization"

    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "-b", "4", "-d", "0,1,8,9")
        assert code == 0
        assert "tile: yes" in out
        assert "stabilization exponent m: 1" in out

    def test_validation_errors(self, capsys):
        assert run_cli(capsys, "analyze", "-b", "4", "-d", "0,1,1,2")[0] == 2
        assert run_cli(capsys, "analyze", "-b", "4", "-d", "0,1,2")[0] == 2
        assert run_cli(capsys, "analyze", "-b", "4", "-d", "0,1,a,2")[0] == 2

    def test_strict_t2_can_block_spectra(self, capsys):
        # support {2, 4} of the standard set fails the literal reading
        _, relaxed, _ = run_cli(capsys, "analyze", "-b", "4", "-d", "0,1,2,3", "--json")
        assert json.loads(relaxed)["spectral"]["all_ok"] is True
        _, strict, _ = run_cli(
            capsys, "analyze", "-b", "4", "-d", "0,1,2,3", "--json", "--strict-t2"
        )
        spectral = json.loads(strict)["spectral"]
        assert spectral["available"] is False
        assert "strict" in spectral["reason"]

    def test_strict_t2_flag_keeps_schema(self, capsys):
        _, out, _ = run_cli(
            capsys, "analyze", "-b", "4", "-d", "0,1,8,9", "--json", "--strict-t2"
        )
        report = json.loads(out)
        # literal reading: support {2, 16} would demand a degree-16 divisor
        full = report["cyclotomic"]["full"]
        assert full["t2"] is True and full["t2_strict"] is False
        # the decomposition parts pass even the literal reading
        assert report["spectral"]["all_ok"] is True

    def test_round_trip(self):
        report, _ = analyze_digit_set(12, [int(x) for x in TWELVE.split(",")])
        assert json.loads(report_to_json(report)) == report

    def test_schema_is_frozen(self):
        report, _ = analyze_digit_set(4, [0, 1, 8, 9])
        assert list(report) == [
            "command", "input", "normalization", "tile", "stabilization",
            "tiling_set", "measure", "decomposition", "cyclotomic",
            "spectral", "measure_report", "stopped_after",
        ]
        assert list(report["cyclotomic"]["full"]) == [
            "set", "support", "t1", "t2", "t2_strict", "spectrum",
        ]
        assert list(report["spectral"]) == [
            "available", "modulus", "support_A", "support_B", "lcm_A",
            "lcm_B", "L1", "L2", "hadamard_A", "hadamard_B",
            "hadamard_joint", "counting_identity", "all_ok",
        ]

    def test_deterministic_output(self, capsys):
        args = ("analyze", "-b", "12", "-d", TWELVE, "--json")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second


class TestSearch:
    def test_base_two_corpus_is_single_set(self):
        assert enumerate_normalized(2, 10) == [(0, 1)]
        records, summary = run_search(2, 10, 4, workers=1)
        assert summary["count"] == 1 and summary["tiles"] == 1
        assert summary["violations"] == []

    def test_base_three_tiles_are_complete_residue_sets(self):
        records, summary = run_search(3, 15, 4, workers=1)
        assert summary["violations"] == [] and summary["inconclusive"] == 0
        for record in records:
            complete = sorted(d % 3 for d in record["digits"]) == [0, 1, 2]
            assert record["tile"] == complete, record

    def test_jsonl_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "search", "-b", "3", "--bound", "9", "--json"
        )
        assert code == 0
        lines = out.strip().split("\n")
        payloads = [json.loads(line) for line in lines]
        assert "summary" in payloads[-1]
        assert payloads[-1]["summary"]["count"] == len(lines) - 1

    def test_worker_env_override_is_deterministic(self, capsys, monkeypatch):
        args = ("search", "-b", "4", "--bound", "9", "--json")
        _, single, _ = run_cli(capsys, *args)
        monkeypatch.setenv("TILESCOPE_WORKERS", "2")
        _, parallel, _ = run_cli(capsys, *args)
        assert single == parallel

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "records.jsonl"
        code, out, _ = run_cli(
            capsys, "search", "-b", "3", "--bound", "7", "--json", "--out", str(path)
        )
        assert code == 0 and out == ""
        assert "summary" in path.read_text().strip().split("\n")[-1]

    def test_default_caps(self, capsys):
        assert run_cli(capsys, "search", "-b", "13", "--bound", "14")[0] == 2
        assert run_cli(capsys, "search", "-b", "3", "--bound", "65")[0] == 2
        with pytest.raises(ValueError, match="exceeds the default cap"):
            run_search(13, 14, 4, workers=1)
        records, _ = run_search(13, 14, 4, workers=1, max_base=13)
        assert records  # configurable override


class TestRender:
    def test_svg_file(self, capsys, tmp_path):
        path = tmp_path / "tower.svg"
        code, _, _ = run_cli(
            capsys,
            "render", "-b", "4", "-d", "0,1,8,9", "-k", "4",
            "--format", "svg", "--out", str(path),
        )
        assert code == 0
        text = path.read_text()
        assert text.startswith("<svg") and 'version="1.1"' in text

    def test_json_stdout(self, capsys):
        code, out, _ = run_cli(
            capsys, "render", "-b", "2", "-d", "0,1", "-k", "3", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert [lvl["intervals"] for lvl in payload["levels"]] == [
            [[0, 1, 1, 1]]
        ] * 3

    def test_non_tile_shrinks(self, capsys):
        code, out, _ = run_cli(
            capsys, "render", "-b", "4", "-d", "0,1,2,5", "-k", "3", "--format", "json"
        )
        assert code == 0
        levels = json.loads(out)["levels"]
        num, den = levels[-1]["total_length"]
        assert num / den < 1


class TestInstalledEntryPoint:
    def test_subprocess_runs_deterministically(self):
        cmd = [
            sys.executable, "-m", "tilescope.cli",
            "analyze", "-b", "12", "-d", TWELVE, "--json",
        ]
        first = subprocess.run(cmd, capture_output=True, check=True)
        second = subprocess.run(cmd, capture_output=True, check=True)
        assert first.stdout == second.stdout and first.stdout
