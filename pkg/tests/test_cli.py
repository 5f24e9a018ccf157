import json
import subprocess
import sys

import pytest

from mkhunt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_evaluate_inline(capsys):
    code, doc = run_json(
        capsys, "evaluate", "--profile", '{"degree": 6, "singularities": {"A2": 9}}'
    )
    assert code == 0 and doc["status"] == "ok"
    ev = doc["payload"]["evaluation"]
    assert ev["total_mk"] == "72" and ev["is_mk"] is True
    assert ev["freeness_defect_mk_form"] == "1"


def test_evaluate_file_and_gallery(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"degree": 8, "singularities": {"E7": 3, "D4": 1, "A3": 2, "A1": 6}}))
    code, doc = run_json(capsys, "evaluate", "--profile-file", str(f))
    assert code == 0 and doc["payload"]["evaluation"]["mk_defect"] == "1/16"
    code, doc2 = run_json(capsys, "evaluate", "--gallery", "steiner_octic")
    assert doc2["payload"]["evaluation"] == doc["payload"]["evaluation"]


def test_odd_degree_reports_not_defined(capsys):
    code, doc = run_json(capsys, "evaluate", "--profile", '{"degree": 7, "singularities": {}}')
    assert code == 0
    assert doc["payload"]["evaluation"]["is_mk"] == "not defined"
    assert doc["warnings"]


def test_json_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, "gallery", "list", "--json")
    assert code == 0 and json.loads(out)["status"] == "ok"


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["evaluate", "--profile", '{"degree": 6,'], "line 1, column"),
        (["evaluate", "--profile", '{"degree": 6, "singularities": {"Q7": 1}}'], "Q7"),
        (["evaluate"], "exactly one"),
        (["bmy", "--gallery", "bonnafe_C18", "--alpha", "0.5"], "0.5"),
        (["hunt", "--degree", "8", "--alphabet", "A1,X2"], "X2"),
        (["hunt", "--degree", "9", "--alphabet", "A1"], "even degree"),
        (["gallery", "show", "nope"], "nope"),
        (["paper-suite", "--only", "no-such-check"], "no-such-check"),
    ],
)
def test_invalid_input_exits_2(capsys, argv, fragment):
    code, doc = run_json(capsys, *argv)
    assert code == 2
    assert doc["status"] == "violated-input"
    assert fragment in doc["payload"]["error"]


def test_facts_file_errors(capsys, tmp_path):
    bad = tmp_path / "f.json"
    bad.write_text("[{")
    code, doc = run_json(
        capsys, "--facts-file", str(bad), "hunt", "--degree", "8", "--alphabet", "A2"
    )
    assert code == 2 and "facts file" in doc["payload"]["error"]


def test_usage_error_exits_2(capsys):
    assert main(["hunt", "--alphabet", "A1"]) == 2


def test_hunt_with_survivors_exits_0(capsys):
    code, doc = run_json(capsys, "hunt", "--degree", "6", "--alphabet", "A2")
    assert code == 0
    assert doc["payload"]["survivors"] == [[9]]


def test_hunt_text(capsys):
    code, out, _ = run(capsys, "hunt", "--degree", "10", "--alphabet", "A1,A3,D4")
    assert code == 0
    assert "integrality" in out


def test_bmy_command(capsys):
    code, doc = run_json(capsys, "bmy", "--gallery", "bonnafe_C18", "--alpha", "7/12")
    v = doc["payload"]["verdict"]
    assert code == 0 and v["status"] == "Satisfied"
    code, doc = run_json(capsys, "bmy", "--gallery", "bonnafe_C18", "--alpha", "1/2")
    assert doc["payload"]["verdict"]["status"] == "Inapplicable"


def test_gallery_show(capsys):
    code, doc = run_json(capsys, "gallery", "show", "bonnafe_C18p")
    assert code == 0 and doc["payload"]["expected"]["freeness_defect"] == 25


def test_paper_suite_subset(capsys):
    code, doc = run_json(capsys, "paper-suite", "--only", "catalog", "--only", "e8-sweep")
    assert code == 0 and doc["payload"]["passed"] is True
    assert [c["id"] for c in doc["payload"]["checks"]] == ["catalog", "e8-sweep"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mkhunt", "gallery", "list"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "steiner_octic" in proc.stdout
