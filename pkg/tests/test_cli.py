import io
import json
import subprocess
import sys

import pytest

from baerlat.cli import main
from baerlat.corpus import fixture, parse_mlat, write_mlat


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def n4_file(tmp_path):
    path = tmp_path / "n4.mlat"
    write_mlat(fixture("N4"), path)
    return str(path)


def test_baer_n4(n4_file):
    assert run("baer", n4_file) == (0, "0 1\n")
    assert run("baer", "N4") == (0, "0 1\n")


def test_validate(n4_file, tmp_path):
    assert run("validate", n4_file)[0] == 0
    bad = tmp_path / "bad.mlat"
    bad.write_text("MLAT 1\nn 2\nleq\n1 1\n0 1\nmul\n0 0\n0 9\n")
    assert run("validate", str(bad))[0] == 2
    bad.write_text("MLAT 1\nn 3\nleq\n1 1 1\n0 1 1\n0 0 1\nmul\n0 0 0\n0 2 1\n0 1 2\n")
    assert run("validate", str(bad))[0] == 2
    assert run("validate", str(tmp_path / "missing.mlat"))[0] == 2


def test_usage_errors(capsys):
    assert run()[0] == 2
    assert run("bogus")[0] == 2
    assert run("closure", "C3", "zz")[0] == 2
    assert run("check", "C3", "--only", "T99")[0] == 2
    assert run("search", "--max-n", "9", "--predicate", "not-reduced")[0] == 2
    assert run("search", "--max-n", "2", "--predicate", "nope")[0] == 2
    assert "error" in capsys.readouterr().err


def test_info():
    code, out = run("info", "Z30")
    assert code == 0
    assert "size: 8" in out and "reduced: yes" in out and "semisimple: yes" in out
    assert "domain: no" in out and "B-multiplicative: yes" in out
    code, out = run("info", "zn:12")
    assert "reduced: no" in out


def test_element_queries():
    assert run("closure", "C3", "m") == (0, "cz: 1\nd: 1\n")
    assert run("radical", "N4", "a") == (0, "b\n")
    assert run("annihilator", "B2", "a") == (0, "b\n")
    # names win over indices: "1" is the top of B2, index 1 of Z_6 is (2)
    assert run("annihilator", "B2", "1") == (0, "0\n")
    assert run("annihilator", "zn:6", "1") == (0, "(3)\n")


def test_frame_emits_mlat():
    code, out = run("frame", "Z30")
    assert code == 0
    assert parse_mlat(out).n == 8
    code, out = run("frame", "C3")
    assert parse_mlat(out).names == ("0", "1")


def test_check_exit_codes():
    assert run("check", "Z30")[0] == 0
    assert run("check", "C3", "--only", "T13,T14")[0] == 0
    # the literal "cz(a) = 1 iff a = 1" clause is false on the 3-chain
    code, out = run("check", "C3", "--only", "T16.3")
    assert code == 1 and "FAIL" in out


def test_check_json_is_byte_identical(n4_file):
    a = run("check", n4_file, "--json")
    b = run("check", n4_file, "--json")
    assert a == b
    assert {r["id"] for r in json.loads(a[1])} >= {"T1.1", "T23"}


def test_gen():
    code, out = run("gen", "chain", "2")
    assert code == 0 and parse_mlat(out) == fixture("C3")
    assert parse_mlat(run("gen", "fixture", "N4")[1]) == fixture("N4")
    assert parse_mlat(run("gen", "product", "C2", "C2")[1]).n == 4
    assert run("gen", "torus", "3")[0] == 2


def test_search():
    code, out = run("search", "--max-n", "3", "--predicate", "not reduced")
    assert code == 1
    body = "".join(line + "\n" for line in out.splitlines() if not line.startswith("#"))
    assert parse_mlat(body).mul[1][1] == 0
    assert run("search", "--max-n", "2", "--predicate", "non-B-multiplicative") == \
        (0, "none found (1 structures examined)\n")


def test_export_dot():
    code, out = run("export-dot", "B2")
    assert code == 0 and out.count("->") == 4


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "baerlat", "baer", "N4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "0 1\n"
    bad = tmp_path / "bad.mlat"
    bad.write_text("not mlat\n")
    proc = subprocess.run([sys.executable, "-m", "baerlat", "validate", str(bad)],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr.startswith("error:")
