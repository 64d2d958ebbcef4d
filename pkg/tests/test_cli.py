from __future__ import annotations

import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from qtbounds.cli import EXIT_GOLDEN, EXIT_INPUT, EXIT_OK, main
from qtbounds.golden import GoldenResult

SPECS = Path(__file__).resolve().parent.parent / "specs"


def test_bounds_on_bundled_spec(capsys):
    assert main(["bounds", str(SPECS / "qt_14_7_4_q3.json")]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert (out["n"], out["dim"], out["d"]) == (14, 7, 4)
    assert out["d_Spec"]["b1"]["value"] == 4
    assert out["d_Spec"]["b2"]["value"] == 3
    assert out["d_Spec"]["b1"]["eigencode_d"] == "inf"
    assert out["d_J"] == 2


def test_bounds_with_shift_family(capsys):
    assert main(["bounds", "--families", "b5", str(SPECS / "qt_14_7_4_q3.json")]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["d_Spec"] == {"b5": out["d_Spec"]["b5"]} and out["d_Spec"]["b5"]["value"] == 3


def test_bounds_on_full_space(tmp_path, capsys):
    f = tmp_path / "full.json"
    f.write_text(json.dumps({"q": 2, "m": 3, "ell": 2, "generators": [[1], [], [], [1]]}))
    assert main(["bounds", str(f)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["d"] == 1


def test_sweep_csv_and_summary(tmp_path, capsys):
    out, summ = tmp_path / "rows.csv", tmp_path / "summary.json"
    args = ["sweep", "--q", "2", "--m", "3,5", "--ell", "2-3", "--count", "3", "--seed", "5"]
    assert main(args + ["--out", str(out), "--summary", str(summ)]) == EXIT_OK
    rows = list(csv.DictReader(out.open()))
    s = json.loads(summ.read_text())
    assert s["nontrivial"] == len(rows) > 0
    assert main(args) == EXIT_OK
    cap = capsys.readouterr()
    assert cap.out == out.read_text()
    assert json.loads(cap.err) == s


def test_ratios(capsys):
    assert main(["ratios", "--q", "2", "--m", "3", "--ell", "2", "--count", "4", "--buckets", "5"]) == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert rows and set(rows[0]) == {"rate_lo", "rate_hi", "count", "mean_L", "mean_S", "mean_J"}


def test_examples_pass(capsys):
    assert main(["examples"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7 and all(x.startswith("PASS") for x in lines)


def test_examples_failure_exit_code(monkeypatch, capsys):
    import qtbounds.cli as cli

    monkeypatch.setattr(cli, "run_worked_examples", lambda: [GoldenResult("broken", {}, ["d: expected 4, got 3"])])
    assert main(["examples"]) == EXIT_GOLDEN
    assert "FAIL" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["bounds", "missing.json"],
        ["bounds", "--families", "b7", str(SPECS / "qt_14_7_4_q3.json")],
        ["sweep", "--q", "6"],
        ["sweep", "--q", "2", "--m", "4"],
        ["sweep", "--q", "5"],
        ["sweep", "--q", "2", "--lambda", "3", "--m", "3"],
        ["sweep", "--count", "x"],
        ["nonsense"],
        [],
    ],
)
def test_input_errors(argv, capsys):
    assert main(argv) == EXIT_INPUT


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == EXIT_OK


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qtbounds", "examples"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.count("PASS") == 7
