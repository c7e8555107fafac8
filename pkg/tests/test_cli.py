from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from nakajima.catalog import REPORT_SCHEMA
from nakajima.cli import run_cli

DATA = Path(__file__).parent / "data"


def run(*argv):
    out = io.StringIO()
    code = run_cli([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_bounds_prints_exact_values():
    code, out = run("bounds", "--p", 3, "--g", 10, "--gamma", 10)
    assert code == 0
    assert "nakajima=27" in out.splitlines()
    assert "threshold=81/5" in out.splitlines()


def test_verify_writes_schema_valid_json(tmp_path):
    path = tmp_path / "out.json"
    code, out = run("verify", "S2-xc-p3", "--json", path)
    assert code == 0
    d = json.loads(path.read_text())
    jsonschema.validate(d, REPORT_SCHEMA)
    assert d["scenario"] == "S2-xc-p3"
    assert not [s for s in d["steps"] if s["status"] == "fail"]
    assert "== S2-xc-p3" in out


def test_verify_all_is_ordered_regardless_of_jobs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("verify", "all", "--json", a)[0] == 0
    assert run("verify", "all", "--jobs", 2, "--json", b)[0] == 0
    assert a.read_text() == b.read_text()
    reports = json.loads(a.read_text())
    assert [r["scenario"] for r in reports][:2] == ["S1-artin-mumford", "S2-xc-p3"]
    for r in reports:
        jsonschema.validate(r, REPORT_SCHEMA)


def test_json_to_stdout():
    code, out = run("prank", "--cover", DATA / "am_cover.json", "--json", "-")
    assert code == 0
    d = json.loads(out)
    assert [s["actual"] for s in d["steps"]] == [4, 4]


def test_genus_command():
    code, out = run("genus", "--tower", DATA / "am_p3.json")
    assert code == 0 and "genus[y]" in out
    code, out = run("genus", "--tower", DATA / "xc_p3.json")
    assert code == 0 and "map h is an automorphism" in out


def test_genus_param_override_changes_nothing_for_nonzero_c():
    assert run("genus", "--tower", DATA / "am_p3.json", "--param", "c=2")[0] == 0


def test_failed_check_exits_1():
    code, out = run("genus", "--tower", DATA / "bad_map.json")
    assert code == 1
    assert "relation for y fails" in out


@pytest.mark.parametrize("argv", [
    ("genus", "--tower", "missing.json"),
    ("prank", "--cover", "missing.json"),
    ("verify", "S7"),
    ("verify", "all", "--jobs", "0"),
    ("bounds", "--p", "3", "--g", "1", "--gamma", "1"),
    ("bounds", "--p", "3"),
    ("group", "--file", str(DATA / "ut33.json"), "--op", "isom"),
    ("count", "--frbound", "--p", "3"),
    ("count", "--bh", "--p", "3", "--n", "2"),
    ("genus", "--tower", str(DATA / "am_p3.json"), "--param", "c"),
    (),
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_bad_json_file_exits_2(tmp_path):
    f = tmp_path / "x.json"
    f.write_text("{")
    assert run("prank", "--cover", f)[0] == 2
    f.write_text('{"p": 3, "order": 10, "gbar": 0, "gammabar": 0}')
    assert run("prank", "--cover", f)[0] == 2


def test_group_commands():
    code, out = run("group", "--file", DATA / "xc_group.json", "--op", "fingerprint")
    assert code == 0 and "identified_as=UT(3,3)" in out and "order=27" in out
    code, out = run("group", "--file", DATA / "wreath.json", "--op", "maximals")
    assert code == 0 and "count=4" in out
    code, out = run("group", "--file", DATA / "xc_group.json", "--op", "isom", "--other", DATA / "ut33.json",
                    "--expect", "yes")
    assert code == 0
    code, _ = run("group", "--file", DATA / "wreath.json", "--op", "isom", "--other", DATA / "ut33.json",
                  "--expect", "yes")
    assert code == 1


def test_count_commands():
    code, out = run("count", "--frbound", "--group", DATA / "c3xc3.json", "--gamma", 2)
    assert code == 0 and "count=1" in out and "alpha=48" in out
    code, out = run("count", "--frbound", "--p", 3, "--n", 1, "--d", 1, "--alpha", 2, "--gamma", 2)
    assert code == 0 and "count=4" in out
    code, out = run("count", "--bh", "--p", 3, "--n", 4, "--d", 4)
    assert "bh_bound=24261120" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nakajima.cli", "bounds", "--p", "5", "--g", "76", "--gamma", "76"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "nakajima=125" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "nakajima.cli", "genus", "--tower", "missing.json"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "no such file" in proc.stderr
