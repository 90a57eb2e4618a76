import json
import subprocess
import sys

import pytest

from qweb import cli
from qweb import webterm as wt


def run_cli(args, stdin=""):
    proc = subprocess.run(
        [sys.executable, "-m", "qweb.cli"] + args,
        input=stdin,
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout


def test_parse_compose_and_boundaries():
    f = cli.parse("merge(1,1) ; split(1,1)")
    assert f == wt.compose(wt.merge(1, 1), wt.split(1, 1))
    g = cli.parse("wdot(2) * id(3)")
    assert (g.src, g.tgt) == ((2, 3), (2, 3))
    with pytest.raises(cli.DSLError):
        cli.parse("merge(1,2) ; merge(1,1)")
    with pytest.raises(cli.DSLError):
        cli.parse("merge(1,1) +")
    with pytest.raises(cli.DSLError):
        cli.parse("3")


def test_parse_scalars_and_dots():
    f = cli.parse("2 * wdot(1) - wdot(1)")
    assert f == wt.wdot(1)
    g = cli.parse("1/2 * (bdot(1) + bdot(1))")
    assert g == wt.bdot(1)
    assert cli.parse("omega(3,0)") == wt.identity((3,))
    assert cli.parse("omegac(2,0)") == wt.wdot(2)
    assert cli.parse("packet(3;2,1;1)") == wt.packet(3, (2, 1), (1,))


def test_dim_command():
    code, out = run_cli(["dim", "--source", "2", "--target", "2", "--maxdeg", "2"])
    assert code == 0 and out.strip() == "2 4 6"
    code, out = run_cli(["dim", "--source", "1,1", "--target", "1,1", "--finite"])
    assert code == 0 and out.strip() == "8"


def test_normalize_command_deterministic():
    args = ["normalize", "--expr", "merge(1,1) ; split(1,1)"]
    code1, out1 = run_cli(args)
    code2, out2 = run_cli(args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["terms"][0]["coefficient"]["re"] == "2"


def test_normalize_boundary_error():
    code, out = run_cli(["normalize", "--expr", "merge(1,2) ; merge(1,1)"])
    assert code == 1
    assert "error" in json.loads(out)


def test_eval_command():
    code, out = run_cli(["eval", "--expr", "wdot(1)", "--n", "2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["parity"] == 1 and doc["rows"] == doc["cols"] == 16


def test_eval_stdin():
    code, out = run_cli(["eval", "--n", "2"], stdin="bdot(1)")
    assert code == 0
    assert json.loads(out)["rows"] == 16


def test_check_relations_command():
    code, out = run_cli(
        ["check-relations", "--suite", "qweb-white", "--bound", "2", "--n", "2"]
    )
    assert code == 0
    assert "FAIL" not in out and "PASS" in out


def test_sergeev_commands():
    code, out = run_cli(["sergeev", "straighten", "x1 s1", "--n", "2"])
    assert code == 0 and out.strip() == "1 - c1 c2 + s1 x2"
    code, out = run_cli(["sergeev", "multiply", "s1", "s1", "--n", "2"])
    assert code == 0 and out.strip() == "1"
    code, out = run_cli(["sergeev", "roundtrip", "x1 s1 c2 x2", "--n", "3"])
    assert code == 0 and out.strip() == "PASS"
    code, out = run_cli(["sergeev", "straighten", "y1", "--n", "2"])
    assert code == 1


def test_poly_check_command():
    code, out = run_cli(["poly-check", "--a", "3", "--k", "2", "--d", "2", "--s", "3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["independent"] and doc["g_lambda_methods_agree"]


def test_usage_error_exit_code():
    code, _ = run_cli(["no-such-command"])
    assert code == 2
