import json
import subprocess
import sys

import pytest

from skeinlab import checks, skein
from skeinlab.cli import main
from skeinlab.setpart import parse_partition


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_resolve_tsv(capsys):
    assert run(capsys, "resolve", "1 3 / 2 4") == (0, "-1\t1 2 / 3 4\n-1\t1 4 / 2 3\n", "")


def test_resolve_methods_agree(capsys):
    a = run(capsys, "resolve", "1 5 / 2 6 / 3 7 / 4 8")
    b = run(capsys, "resolve", "1 5 / 2 6 / 3 7 / 4 8", "--method", "algebraic")
    c = run(capsys, "resolve", "1 5 / 2 6 / 3 7 / 4 8", "--policy", "most-tangled")
    assert a == b == c


def test_act(capsys):
    code, out, _ = run(capsys, "act", "1 2 3 4 5 6 -> 2 3 4 5 6 1", "1 5 6 / 2 4 / 3")
    assert (code, out) == (0, "-1\t1 2 6 / 3 5 / 4\n")
    code, out, _ = run(capsys, "act", "2 3 4 5 6 1", "1 5 6 / 2 4 / 3", "--format", "human")
    assert out == "-{1 2 6 / 3 5 / 4}\n"


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "4", "--k", "2", "--noncrossing", "--count")[1] == "6\n"
    code, out, _ = run(capsys, "enumerate", "3")
    lines = out.splitlines()
    assert len(lines) == 5
    # printed partitions parse back to distinct partitions
    assert len({parse_partition(x) for x in lines}) == 5
    out = run(capsys, "enumerate", "5", "--k", "3", "--m", "1", "--format", "json-lines")[1]
    assert all("partition" in json.loads(x) for x in out.splitlines())


def test_sigma_and_fermion(capsys):
    out = run(capsys, "sigma", "1 3 / 2 4", "--format", "human")[1]
    assert out == "{1 2 / 3 4} + {1 4 / 2 3}\n"
    assert run(capsys, "fermion", "1 3 / 2")[1] == "-t1 x1 x2 - t3 x2 x3\n"
    assert run(capsys, "fermion", "1 3 / 2", "--which", "f")[1] == "-t1 x1 + t1 x2 - t3 x2 + t3 x3\n"


def test_frobenius(capsys):
    assert run(capsys, "frobenius", "9", "5", "1")[1] == "1\t5 4\n1\t4 4 1\n"
    assert run(capsys, "frobenius", "6", "3", "0", "--format", "human")[1] == "s(3,3)\n"
    assert run(capsys, "frobenius", "4", "1", "1")[1] == ""


def test_tables(capsys):
    out = run(capsys, "hilbert", "3")[1].splitlines()
    assert out[0] == "m\\k\t0\t1\t2\t3"
    assert out[3].split("\t") == ["2", "0", "3", "3", "0"]
    out = run(capsys, "fdr-dims", "3", "--format", "json-lines")[1].splitlines()
    cells = {(d["i"], d["j"]): d["dim"] for d in map(json.loads, out)}
    assert cells[(1, 1)] == 3 and cells[(2, 0)] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["resolve", "1 3 / 2 x"],
        ["resolve", "1 3 / 3"],
        ["act", "1 1 2", "1 2 / 3"],
        ["act", "2 1", "1 2 / 3"],
        ["sigma", "1 2 / 3 4"],
        ["frobenius", "12", "3"],
        ["enumerate", "20"],
        ["verify", "--nmax", "8"],
    ],
)
def test_domain_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == ""
    assert err.count("\n") == 1 and "error" in err


def test_parse_error_reports_position(capsys):
    err = run(capsys, "resolve", "1 3 / 2 x")[2]
    assert "position 8" in err and "expected" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--nmax", "2")
    assert code == 0
    assert len(out.splitlines()) == len(checks.CHECKS)
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_verify_deterministic_across_threads(capsys, monkeypatch):
    a = run(capsys, "verify", "--nmax", "4")
    monkeypatch.setenv("SKEINLAB_THREADS", "3")
    b = run(capsys, "verify", "--nmax", "4")
    c = run(capsys, "verify", "--nmax", "4", "--threads", "2", "--format", "json-lines")
    assert a == b and a[0] == 0
    assert [json.loads(x)["pass"] for x in c[1].splitlines()] == [True] * len(checks.CHECKS)


def test_verify_catches_flipped_skein_sign(capsys, monkeypatch):
    monkeypatch.setattr(skein, "_SKEIN_SIGN", 1)
    code, out, _ = run(capsys, "verify", "--nmax", "4")
    assert code == 1
    assert "FAIL  skein: Coxeter relations" in out.splitlines()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "skeinlab", "enumerate", "4", "--k", "2", "--noncrossing", "--count"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert (proc.returncode, proc.stdout) == (0, "6\n")
