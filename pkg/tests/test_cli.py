"""Command-line surface: byte stability, schemas, exit codes, parallelism."""

import json
import os
import subprocess
import sys

BASE = [sys.executable, "-m", "agrees.cli"]


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("AGREES_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        BASE + list(args), capture_output=True, text=True, env=env, timeout=600)


def test_analyze_json_schema():
    out = run_cli("analyze", "--ideal", "x^3, x^2 y^3, x y^5, y^6")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["schema"] == "agrees/1"
    assert doc["verdict"] == "NOT_AG"
    assert doc["refutation"]["min_sum"] == 5
    assert doc["refutation"]["threshold"] == 4
    assert doc["colon"]["min_gens"] == 3
    # keys are sorted at every level
    assert list(doc) == sorted(doc)
    assert list(doc["refutation"]) == sorted(doc["refutation"])


def test_analyze_fixed_key_set():
    doc = json.loads(run_cli("analyze", "--ideal", "x^3, y^6").stdout)
    assert doc["verdict"] == "GORENSTEIN"
    for key in ("witness", "refutation", "rees_bidegrees"):
        assert key in doc and doc[key] is None


def test_analyze_certified_witness():
    doc = json.loads(run_cli("analyze", "--ideal", "x^2, x y^4, y^5").stdout)
    assert doc["verdict"] == "AG_CERTIFIED"
    assert doc["witness"] == {"f": "x", "g": "x^2", "h": "y"}


def test_analyze_byte_stable():
    a = run_cli("analyze", "--ideal", "x^2, x y^4, y^5", "--seed", "7")
    b = run_cli("analyze", "--ideal", "x^2, x y^4, y^5", "--seed", "7")
    assert a.stdout == b.stdout
    assert "elapsed" in a.stderr  # timing stays off stdout


def test_analyze_pretty_includes_staircase():
    out = run_cli("analyze", "--ideal", "x^2, x y^4, y^5", "--pretty")
    assert out.returncode == 0
    assert "AG_CERTIFIED" in out.stdout
    assert "staircase" in out.stdout and "#" in out.stdout


def test_analyze_rees_flag():
    doc = json.loads(run_cli("analyze", "--ideal", "x^3, y^6", "--rees").stdout)
    assert doc["rees_bidegrees"] == [[1, 3]]


def test_analyze_prime_field():
    doc = json.loads(
        run_cli("analyze", "--ideal", "x^3, x^2 y^3, y^5",
                "--field", "fp:2147483647").stdout)
    assert doc["verdict"] == "NOT_AG"
    assert doc["refutation"]["primes"] == [2147483647, 2147483629]


def test_analyze_input_errors_exit_two():
    assert run_cli("analyze", "--ideal", "x^^2").returncode == 2
    assert run_cli("analyze", "--ideal", "z + y").returncode == 2
    assert run_cli("analyze", "--ideal", "x^2").returncode == 2  # not m-primary
    assert run_cli("analyze", "--ideal", "x, y", "--field", "fp:15").returncode == 2


def test_seed_env_override():
    doc = json.loads(
        run_cli("analyze", "--ideal", "x^3, y^6", "--seed", "3",
                env_extra={"AGREES_SEED": "11"}).stdout)
    assert doc["seed"] == 11


def test_survey_csv_shape():
    out = run_cli("survey", "--family", "three-gen", "--n", "3..5",
                  "--alpha", "1..4", "--seed", "0")
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert lines[0] == "family,params,verdict,o,mu_I,mu_J,min_sum,threshold,witness"
    rows = [line.split(",") for line in lines[1:]]
    params = [r[1] for r in rows]
    assert params == sorted(params, key=lambda p: [int(kv.split("=")[1]) for kv in p.split(";")])
    assert "invalid tuples skipped" in out.stderr
    verdicts = {r[1]: r[2] for r in rows}
    assert verdicts["n=4;alpha=2"] == "AG_CERTIFIED"
    assert verdicts["n=3;alpha=2"] == "NOT_AG"


def test_survey_jobs_deterministic():
    args = BASE + ["survey", "--family", "power-order", "--m", "2..3", "--n", "2..5"]
    env = dict(os.environ)
    env.pop("AGREES_SEED", None)
    one = subprocess.run(args + ["--jobs", "1"], capture_output=True, env=env, timeout=600)
    two = subprocess.run(args + ["--jobs", "2"], capture_output=True, env=env, timeout=600)
    assert one.stdout == two.stdout
    # RFC-4180 line endings on the raw byte stream
    assert one.stdout.count(b"\r\n") == one.stdout.count(b"\n")


def test_survey_out_file(tmp_path):
    path = tmp_path / "rows.csv"
    out = run_cli("survey", "--family", "remark43", "--m", "4..4",
                  "--out", str(path))
    assert out.returncode == 0 and out.stdout == ""
    content = path.read_text()
    assert "remark43,m=4,NOT_AG" in content


def test_survey_missing_range_exit_two():
    assert run_cli("survey", "--family", "three-gen", "--n", "3..5").returncode == 2
    assert run_cli("survey", "--family", "three-gen", "--n", "bad",
                   "--alpha", "1..2").returncode == 2


def test_repro_single_check():
    out = run_cli("repro", "thm14-simplest")
    assert out.returncode == 0
    assert "PASS" in out.stdout and "NOT_AG" in out.stdout


def test_repro_unknown_check():
    assert run_cli("repro", "definitely-not-a-check").returncode == 2


def test_repro_list():
    out = run_cli("repro", "--list")
    ids = out.stdout.split()
    assert "thm14-simplest" in ids and "prop41-boundary" in ids
    assert out.returncode == 0


def test_repro_prop41():
    out = run_cli("repro", "prop41-boundary")
    assert out.returncode == 0 and "0 mismatches" in out.stdout
