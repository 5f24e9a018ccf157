"""Acceptance criteria 1-16, each run exactly (tolerance 0).

Every criterion maps to one reproduction check in :mod:`mkhunt.suite`; the
same checks back ``mkhunt paper-suite``. One PASS/FAIL line per criterion is
written to the terminal even when output capture is on.
"""
import subprocess
import sys

import pytest

from mkhunt.suite import CHECK_IDS, run_check

CRITERIA = {
    1: "catalog",
    2: "mk-sextics",
    3: "steiner-octic",
    4: "octic-hunt",
    5: "bmy-coefficients",
    6: "degree10-mod9",
    7: "irreducible-a1a2",
    8: "nodal-cuspidal",
    9: "e6-sweep",
    10: "e8-sweep",
    11: "e7-sweep",
    12: "line-arrangements",
    13: "freeness",
    14: "min-singularities",
    15: "oracle-equivalence",
    16: "determinism",
}


def test_every_check_is_mapped():
    assert sorted(CRITERIA.values()) == sorted(CHECK_IDS)


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda n: f"criterion_{n:02d}")
def test_criterion(number, capsys):
    result = run_check(CRITERIA[number])
    with capsys.disabled():
        mark = "PASS" if result.passed else "FAIL"
        print(f"\n[acceptance] criterion {number:2d} {mark}  {result.id}: {result.title}")
        for msg in result.failures:
            print(f"[acceptance]     {msg}")
    assert result.passed, result.failures


def _suite_stdout(*extra):
    proc = subprocess.run(
        [sys.executable, "-m", "mkhunt", "--json", "paper-suite", *extra],
        capture_output=True, check=False,
    )
    assert proc.returncode == 0, proc.stderr.decode()
    return proc.stdout


def test_cli_suite_output_is_byte_identical(capsys):
    serial = _suite_stdout()
    parallel = _suite_stdout("--workers", "2")
    same = serial == parallel
    with capsys.disabled():
        print(f"\n[acceptance] criterion 16 {'PASS' if same else 'FAIL'}  paper-suite --json, serial vs --workers 2")
    assert same
