import io
import json
import os
import subprocess
import sys

import pytest

from satake_kit import cli


def call(argv, tmp_path=None):
    out, err = io.StringIO(), io.StringIO()
    extra = ["--no-cache"] if tmp_path is None else ["--cache-dir", str(tmp_path)]
    code = cli.main(list(argv) + extra, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_kostka_example():
    code, out, _ = call(["kostka", "--n", "2", "--lam", "2", "0", "--mu", "1", "1"])
    assert code == 0 and json.loads(out) == {"poly": "q"}
    code, out, _ = call(["kostka", "--n", "3", "--lam", "2", "1", "0", "--mu", "1", "1", "1", "--check"])
    assert code == 0 and json.loads(out)["poly"] == "q + q^2"


def test_stalks_example():
    code, out, _ = call(["stalks", "--flavor", "quaternionic", "--n", "2", "--size", "2"])
    assert code == 0
    rows = json.loads(out)["rows"]
    row = next(r for r in rows if r["lam"] == [2, 0] and r["mu"] == [1, 1])
    assert row["degrees"] == {"-4": 1}


def test_twistor_example():
    code, out, _ = call(["twistor", "--n", "1", "--envelope"])
    env = json.loads(out)
    assert code == 0 and env["status"] == "pass"
    assert env["payload"]["phi"]["phi"] == [["1", "0"], ["-t1", "1"]]
    assert all(c["passed"] for c in env["checks"])


def test_usage_errors_exit_2():
    assert call(["kostka", "--n", "2", "--lam", "0", "2", "--mu", "1", "1"])[0] == 2
    assert call(["kostka", "--n", "2", "--lam", "2", "0", "0", "--mu", "1", "1"])[0] == 2
    assert call(["branch", "--n", "1", "--Lam", "0", "1"])[0] == 2
    assert call(["no-such-command"])[0] == 2
    assert call(["stalks", "--n", "0", "--size", "2"])[0] == 2


def test_shear_command(tmp_path):
    src = tmp_path / "series.json"
    src.write_text("[[2, 2, 1], [2, 0, 2]]", encoding="utf-8")
    code, out, _ = call(["shear", "--input", str(src)])
    assert code == 0 and json.loads(out) == [[0, 2, 1], [2, 0, 2]]
    back = tmp_path / "back.json"
    back.write_text(out, encoding="utf-8")
    assert json.loads(call(["shear", "--input", str(back), "--inverse"])[1]) == [[2, 0, 2], [2, 2, 1]]
    src.write_text("[[1, 1, 1]]", encoding="utf-8")
    code, _, err = call(["shear", "--input", str(src)])
    assert code == 2 and "odd" in err
    assert call(["shear", "--input", str(tmp_path / "missing.json")])[0] == 2


def test_table_formats():
    code, out, _ = call(["stalks", "--n", "2", "--size", "2", "--format", "csv"])
    lines = out.splitlines()
    assert code == 0 and lines[0] == "lam,mu,poly,degrees,orbit_dim" and len(lines) == 6
    code, out, _ = call(["kostka-table", "--n", "3", "--size", "3", "--format", "latex"])
    assert code == 0 and out.startswith(r"\begin{tabular}") and out.rstrip().endswith(r"\end{tabular}")
    code, out, _ = call(["kostka-table", "--n", "2", "--size", "4", "--jobs", "2"])
    assert code == 0 and json.loads(out) == json.loads(call(["kostka-table", "--n", "2", "--size", "4"])[1])


def test_bk_and_branch():
    code, out, _ = call(["bk", "--n", "2", "--lam", "2", "0"])
    data = json.loads(out)
    assert code == 0 and data["dimension"] == 3
    assert all(r["poly"] == r["kostka"] for r in data["table"])
    code, out, _ = call(["branch", "--n", "1", "--Lam", "1", "0"])
    assert code == 0 and json.loads(out)["free_module"]["hilbert_identity"] is True


@pytest.mark.parametrize("check", ["companion", "tau", "shalika", "embedding"])
def test_centralizer_checks(check):
    code, out, _ = call(["centralizers", "--check", check, "--n", "2", "--seed", "3", "--envelope"])
    env = json.loads(out)
    assert code == 0 and env["status"] == "pass" and env["checks"]


def test_cache_round_trip(tmp_path):
    argv = ["kostka-table", "--n", "2", "--size", "3"]
    first = call(argv, tmp_path)
    assert len(list(tmp_path.glob("*.json"))) == 1
    assert call(argv, tmp_path) == first


def test_verify_is_deterministic():
    argv = ["verify", "--suite", "kostka", "companion", "--n", "2", "--seed", "5"]
    a, b = call(argv), call(argv)
    assert a == b and a[0] == 0
    env = json.loads(a[1])
    assert "timing_seconds" not in env and env["config"]["seed"] == 5


def test_timing_flag():
    env = json.loads(call(["kostka", "--n", "2", "--lam", "1", "0", "--mu", "1", "0", "--envelope", "--timing"])[1])
    assert env["timing_seconds"] >= 0


def test_entry_point_subprocess(tmp_path):
    env = dict(os.environ, SATAKE_KIT_CACHE_DIR=str(tmp_path))
    proc = subprocess.run(
        [sys.executable, "-m", "satake_kit.cli", "kostka", "--n", "2", "--lam", "2", "0", "--mu", "1", "1"],
        capture_output=True, text=True, env=env, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"poly": "q"}
