import io
import json
import subprocess
import sys

import pytest

from eisenstein2.cli import RunConfig, ConfigError, main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.mark.parametrize("name, order, expected", [
    ("D", 5, {"valuation": 1, "order": 5, "coeffs": ["1", "8", "28", "64"]}),
    ("j2", 3, {"valuation": -1, "order": 3, "coeffs": ["1", "40", "276", "-2048"]}),
    ("psi", 4, {"valuation": 0, "order": 4, "coeffs": ["1", "1", "0", "1"]}),
])
def test_expand(name, order, expected):
    code, out = run("expand", name, "--order", str(order))
    assert code == 0
    assert json.loads(out) == expected
    assert out.strip() == json.dumps(expected, separators=(",", ":"))


def test_expand_unknown_name():
    assert run("expand", "nope")[0] == 2


def test_verify_ok_and_order_floor():
    code, out = run("verify", "diffeq", "--order", "200")
    assert code == 0 and "FAIL" not in out
    assert run("--order", "4", "verify", "all")[0] == 2
    assert run("verify", "table1", "--order", "100")[0] == 0


def test_verify_mutated_json():
    code, out = run("verify", "--suite", "triangular", "--order", "40", "--json", "--mutate")
    data = json.loads(out)
    assert code == 1 and data["passed"] is False
    assert all(r["first_mismatch"] is not None for r in data["results"])


def test_verify_parallel_matches_serial():
    a = json.loads(run("verify", "table1", "--order", "40", "--json")[1])
    b = json.loads(run("verify", "table1", "--order", "40", "--json", "--jobs", "2")[1])
    assert a["results"] == b["results"] and b["meta"]["jobs"] == 2


def test_env_order_echoed(monkeypatch):
    monkeypatch.setenv("EISENSTEIN2_ORDER", "30")
    code, out = run("verify", "diffeq", "--json")
    meta = json.loads(out)["meta"]
    assert code == 0 and meta == {"order": 30, "order_from_env": True, "jobs": 1}
    monkeypatch.setenv("EISENSTEIN2_ORDER", "x")
    assert run("verify", "diffeq")[0] == 2


def test_solve():
    code, out = run("solve", "--weight", "6", "--json")
    data = json.loads(out)
    assert code == 0 and data["residual"]["zero"]
    assert data["poly"] == [{"P": 0, "e": 1, "Q": 1, "c": "3/5"}, {"P": 0, "e": 3, "Q": 0, "c": "2/5"}]
    code, out = run("solve", "--weight", "6", "--closed-form-lambda", "--json")
    assert code == 1 and json.loads(out)["residual"]["first_nonzero"] == 1
    code, out = run("solve", "--weight", "4", "--method", "hypergeometric", "--json")
    assert json.loads(out)["poly"] == [{"e": 0, "D": 1, "c": "-64/3"}, {"e": 2, "D": 0, "c": "1"}]
    assert run("solve", "--weight", "2", "--method", "hypergeometric")[0] == 2
    assert run("solve", "--weight", "7")[0] == 2


def test_discover():
    code, out = run("discover", "--weight", "4", "--max-weight", "8", "--json")
    rows = [json.loads(ln) for ln in out.splitlines()]
    assert code == 0 and [r["k"] for r in rows] == [4, 6, 8]
    assert rows[2]["lhs"] == {"c0": 17, "c1": -32, "s": 7}
    assert rows[0]["verified_to"] == 100


def test_triangular_and_combinatorial():
    code, out = run("triangular", "--k", "2", "--order", "60", "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"]["passed"]
    code, out = run("combinatorial", "--max-n", "3", "--emit-counts", "--json")
    lines = [json.loads(ln) for ln in out.splitlines()]
    assert code == 0 and lines[-1] == {"n": 3, "countA": 0, "countB": 1}


def test_usage_errors():
    assert run()[0] == 2
    assert run("verify", "nosuch")[0] == 2
    assert run("triangular")[0] == 2


def test_run_config():
    assert RunConfig().default_order == 100
    with pytest.raises(ConfigError):
        RunConfig(default_order=7)
    with pytest.raises(ConfigError):
        RunConfig(parallelism=-1)


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "eisenstein2", "expand", "E2:8", "--order", "12"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["order"] == 12
