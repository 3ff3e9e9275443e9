import json
import math
import os
import subprocess
import sys

import pytest

from vpvcheck import __version__
from vpvcheck.cli import main, to_json
from vpvcheck.registry import lookup


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("VPV_DEPTH_SCALE", None)
    full_env.update(env or {})
    return subprocess.run([sys.executable, "-m", "vpvcheck", *args], capture_output=True,
                          text=True, env=full_env, timeout=600)


def call(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- eval

def test_eval_li(capsys):
    code, out, _ = call(capsys, "eval", "li", "-s", "2", "-z", "0.5")
    assert code == 0
    assert out.strip().startswith("0.582240526465")


def test_eval_stirling(capsys):
    assert call(capsys, "eval", "stirling2", "-n", "4", "-k", "2")[:2] == (0, "7\n")


def test_eval_domain_error_exit_1():
    p = run("eval", "li", "-s", "2", "-z", "1.5")
    assert p.returncode == 1
    assert "z <= 1" in p.stderr


def test_eval_series_prints_tail(capsys):
    code, out, _ = call(capsys, "eval", "double_zeta", "-s", "2", "-t", "1", "--depth", "10000")
    assert code == 0
    fields = dict(line.split() for line in out.splitlines())
    assert set(fields) == {"value", "tail_estimate", "corrected", "convergence_delta"}
    assert float(fields["corrected"]) == pytest.approx(1.2020569031595942, abs=1e-9)


@pytest.mark.parametrize("args,want", [
    (("rogers_l", "-x", "0.5"), 0.5),
    (("power_sum", "-p", "1", "-n", "100"), 5050),
    (("geom_power_sum", "-p", "1", "-n", "2", "-z", "0.5"), 1.0),
    (("mtw_omega", "-e", "2", "2", "--depth", "2000"), math.pi ** 4 / 90),
])
def test_eval_functions(capsys, args, want):
    code, out, _ = call(capsys, "eval", *args)
    assert code == 0
    assert float(out) == pytest.approx(want, rel=1e-9)


def test_eval_euler_sum_bad_signature(capsys):
    code, _, err = call(capsys, "eval", "euler_sum", "--kind", "s_h", "-m", "2", "-n", "1")
    assert code == 1 and "diverges" in err


# -- verify

def test_verify_dilog_value_json(capsys):
    code, out, _ = call(capsys, "verify", "--family", "dilog_value", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"tool_version", "config", "records", "summary"}
    assert doc["tool_version"] == __version__
    s = doc["summary"]
    assert (s["pass"], s["fail"], s["total"]) == (8, 1, 9)
    assert s["reported_failures"] == ["eq23.18"]
    assert len(doc["records"]) == s["total"] == s["pass"] + s["fail"] + s["inconclusive"]
    rec = doc["records"][0]
    for key in ("id", "citation", "params", "lhs", "rhs", "abs_err", "rel_err", "depth",
                "convergence_delta", "verdict", "note"):
        assert key in rec


def test_verify_single_case_with_depth(capsys):
    code, out, _ = call(capsys, "verify", "--id", "eq23.38a4", "--depth", "120",
                        "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert [r["id"] for r in doc["records"]] == ["eq23.38a4"]
    assert doc["records"][0]["verdict"] == "pass"
    assert doc["records"][0]["depth"] == 120


def test_verify_depth_one_exits_zero():
    p = run("verify", "--depth", "1", "--format", "json")
    assert p.returncode == 0
    doc = json.loads(p.stdout)
    lattice = [r for r in doc["records"] if lookup(r["id"]).is_lattice]
    assert lattice and all(r["verdict"] == "inconclusive" for r in lattice)


def test_broken_tolerance_exit_3(capsys):
    code, out, _ = call(capsys, "verify", "--id", "eq23.38a4", "--tol-abs", "1e-300",
                        "--tol-rel", "1e-300")
    assert code == 3
    assert "assert_pass failures: eq23.38a4" in out


def test_reported_failure_does_not_change_exit(capsys):
    code, out, _ = call(capsys, "verify", "--id", "eq23.18")
    assert code == 0 and "fail" in out


def test_param_override(capsys):
    code, out, _ = call(capsys, "verify", "--id", "eq23.05", "--param", "z=0.7",
                        "--format", "json")
    assert code == 0
    assert json.loads(out)["records"][0]["params"] == {"z": 0.7}


def test_param_outside_domain_exit_1(capsys):
    code, _, err = call(capsys, "verify", "--id", "eq23.05", "--param", "z=1.7")
    assert code == 1 and "outside domain" in err


@pytest.mark.parametrize("args", [
    ("verify", "--id", "eq99.1"),
    ("verify", "--param", "z=0.3"),
    ("verify", "--id-prefix", "zzz"),
])
def test_usage_errors_exit_2(capsys, args):
    assert call(capsys, *args)[0] == 2


@pytest.mark.parametrize("args", [
    ("verify", "--depth", "0"),
    ("verify", "--depth", "9:10"),
    ("verify", "--tol-rel", "-1"),
    ("verify", "--format", "xml"),
    ("frobnicate",),
    ("eval", "li", "-s", "2"),
])
def test_argparse_errors_exit_2(args):
    assert run(*args).returncode == 2


def test_per_dimension_depth(capsys):
    code, out, _ = call(capsys, "verify", "--id-prefix", "eq23.38", "--depth", "2:30",
                        "--depth", "3:20", "--format", "json")
    depths = {r["id"]: r["depth"] for r in json.loads(out)["records"]}
    assert depths["eq23.38a4"] == 30
    assert depths["eq23.38b4"] == 20


def test_depth_scale_env():
    p = run("verify", "--id", "eq23.38a4", "--format", "json", env={"VPV_DEPTH_SCALE": "0.5"})
    doc = json.loads(p.stdout)
    assert doc["config"]["depth_scale"] == 0.5
    assert doc["records"][0]["depth"] == 30
    assert run("verify", "--id", "eq23.15", env={"VPV_DEPTH_SCALE": "-2"}).returncode == 2


def test_json_reports_are_byte_identical():
    args = ("verify", "--family", "vpv_pyramid", "--format", "json")
    a, b = run(*args), run(*args)
    assert a.returncode == b.returncode
    assert a.stdout == b.stdout
    c = run(*args, "--parallel")
    da, dc = json.loads(a.stdout), json.loads(c.stdout)
    assert da["records"] == dc["records"] and da["summary"] == dc["summary"]


# -- list

def test_list_counts(capsys):
    for prefix, n in (("table1", 19), ("table2", 29)):
        code, out, _ = call(capsys, "list", "--id-prefix", prefix)
        assert code == 0
        assert len(out.splitlines()) - 1 == n


def test_list_pyramid_family(capsys):
    _, out, _ = call(capsys, "list", "--family", "vpv_pyramid")
    listed = {line.split()[0] for line in out.splitlines()[1:]}
    assert {f"thm23.57{x}" for x in "bcdefghi"} | {"thm23.61a"} <= listed


def test_list_json(capsys):
    _, out, _ = call(capsys, "list", "--id-prefix", "eq23.1", "--format", "json")
    rows = json.loads(out)
    assert rows and all(r["id"].startswith("eq23.1") for r in rows)


# -- serialisation

def test_to_json_number_format():
    text = to_json({"b": 0.1, "a": [1, 2.0, math.nan, math.inf], "c": None, "d": "x\"y"})
    assert text.index('"a"') < text.index('"b"')
    assert "0.10000000000000001" in text
    assert "2.0" in text and "null" in text
    assert json.loads(text)["a"] == [1, 2.0, None, None]
    assert json.loads(text)["d"] == 'x"y'
