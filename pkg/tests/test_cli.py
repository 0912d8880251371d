import json

import pytest

from linksgould.cli import run
from linksgould.ring import RingElem


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_text(capsys, trefoil):
    code, out, _ = _run(capsys, "eval", "n=2; 1 1 1")
    assert code == 0
    assert out.strip() == trefoil.to_string()


def test_eval_json_round_trip(capsys, figure_eight):
    code, out, _ = _run(capsys, "eval", "--json", "n=3; 1 -2 1 -2")
    rec = json.loads(out)
    assert code == 0
    assert RingElem.from_json(rec["polynomial"]) == figure_eight
    assert rec["palindromic"] is True and rec["inversion_symmetric"] is True


def test_eval_bad_generator(capsys):
    code, _, err = _run(capsys, "eval", "n=2; 7")
    assert code == 2
    assert "generator 7 out of range for 2 strands" in err


def test_eval_bad_token(capsys):
    code, _, err = _run(capsys, "eval", "n=2; 1 y")
    assert code == 2 and "'y'" in err


def test_catalog_single(capsys, figure_eight):
    code, out, _ = _run(capsys, "catalog", "4₁")
    assert code == 0
    assert out.startswith("PASS 4_1")
    assert figure_eight.to_string() in out


def test_catalog_unknown(capsys):
    code, _, err = _run(capsys, "catalog", "6_1")
    assert code == 2 and "6_1" in err


def test_catalog_dump(capsys):
    code, out, _ = _run(capsys, "catalog", "--dump")
    assert code == 0
    assert {rec["name"] for rec in json.loads(out)} >= {"0_1", "KT", "KT'"}


def test_check_link_json(capsys):
    code, out, _ = _run(capsys, "check", "--json", "--link", "9_42")
    rec = json.loads(out)
    assert code == 0
    assert rec["name"] == "9_42" and rec["chirality"] == "chiral"
    assert rec["inversion_symmetric"] and not rec["palindromic"]


def test_check_braid(capsys):
    code, out, _ = _run(capsys, "check", "n=3; 1 -2 1 -2")
    assert code == 0
    assert "chirality: inconclusive" in out


def test_check_needs_input(capsys):
    code, _, _ = _run(capsys, "check")
    assert code == 2


def test_pretzel(capsys):
    code, out, _ = _run(capsys, "pretzel", "--json", "7", "3", "5")
    rec = json.loads(out)
    assert code == 0 and rec["name"] == "TP(7,3,5)" and rec["chirality"] == "chiral"


def test_pretzel_bad(capsys):
    code, _, err = _run(capsys, "pretzel", "3", "3", "5")
    assert code == 2 and "distinct" in err


def test_selftest(capsys):
    code, out, _ = _run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == 5


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2
