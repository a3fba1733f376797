import json
from pathlib import Path

import pytest

from realcycles.cli import run
from realcycles.cellular import builtin
from realcycles.literals import parse_form, parse_section
from realcycles.quadform import witt_equal

GOLDEN = Path(__file__).parent / "golden"


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_witt_equal_pass(capsys):
    code, out, _ = cli(capsys, "form", "witt-equal", "<1,-1>", "<>")
    assert code == 0 and out.strip() == "equal"


def test_witt_equal_fail(capsys):
    code, _, _ = cli(capsys, "form", "witt-equal", "<1,t>", "<1,-t>")
    assert code == 1


def test_table_rp3_matches_golden(capsys):
    code, out, _ = cli(capsys, "table", "RP3")
    assert code == 0 and out == (GOLDEN / "RP3.tsv").read_text()


def test_verify_thmA7(capsys):
    code, out, _ = cli(capsys, "verify", "thmA7", "--samples", "100", "--seed", "7", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass" and rep["failures"] == []


def test_verify_needs_seed(capsys):
    code, _, err = cli(capsys, "verify", "triangle316")
    assert code == 2 and "--seed" in err


def test_parse_error_exit(capsys):
    code, _, err = cli(capsys, "form", "class", "<1, t+>")
    assert code == 2 and "line 1, column 7" in err


def test_usage_error_exit(capsys):
    assert cli(capsys, "nosuchcommand")[0] == 2
    assert cli(capsys, "form", "sum", "<1>")[0] == 2


def test_json_is_deterministic(capsys):
    argv = ("verify", "wittOracle", "--seed", "3", "--samples", "30", "--format", "json")
    first = cli(capsys, *argv)[1]
    assert cli(capsys, *argv)[1] == first


def test_printed_forms_reparse(capsys):
    _, out, _ = cli(capsys, "form", "tensor", "<1, t-1>", "<t, -2>")
    f = parse_form(out.strip())
    assert witt_equal(f, parse_form("<t, -2, t*(t-1), -2*(t-1)>"))
    _, out, _ = cli(capsys, "form", "signature", "<1, -(t^2-2)>")
    s = parse_section(out.strip())
    assert s.values == (0, 2, 0)


def test_gersten_commands(capsys):
    code, out, _ = cli(capsys, "gersten", "coboundary", "0=1", "inf=-1")
    assert code == 0 and "preimage" in out
    assert cli(capsys, "gersten", "coboundary", "0=1")[0] == 1
    code, out, _ = cli(capsys, "gersten", "groups", "--twist", "1", "--format", "json")
    assert json.loads(out)["H1"] == "Z/2"
    code, out, _ = cli(capsys, "gersten", "cycle-class", "--form", "<1,t>", "--curve", "A1 minus {0}", "--level", "1")
    assert code == 0 and "(0, +inf): 1" in out


def test_cellular_from_file(capsys, tmp_path):
    p = tmp_path / "rp2.json"
    p.write_text(json.dumps(builtin("RP2").spec.to_json()))
    code, out, _ = cli(capsys, "cohomology", str(p), "--coeff", "ZL", "--format", "tsv")
    assert code == 0 and out.splitlines()[1:] == ["0\t0", "1\tZ/2", "2\tZ"]
    bad = tmp_path / "bad.json"
    bad.write_text('{"cells": [1, 1], "Z": [[[2]]]')
    code, _, err = cli(capsys, "cohomology", str(bad))
    assert code == 2 and "line 1" in err


def test_out_flag(capsys, tmp_path):
    out = tmp_path / "cw.json"
    assert cli(capsys, "chowwitt", "P1", "--format", "json", "--out", str(out))[0] == 0
    data = json.loads(out.read_text())
    assert [e["group"] for e in data["entries"]] == ["Z^2", "Z^2"]


@pytest.mark.parametrize("suite", ["prop410n1", "eulerP1", "bocksteinRP2", "twoRouteP1", "rpTables", "chowWittP1"])
def test_deterministic_suites(capsys, suite):
    assert cli(capsys, "verify", suite)[0] == 0
