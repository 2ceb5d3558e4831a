"""Acceptance suite: one test per criterion, one printed line each.

Criteria 1-8 run through the reproduction checks; criterion 9 drives the
``reproduce`` subcommand end to end in a subprocess.
"""

from __future__ import annotations

import subprocess
import sys

from layerlens import reproduce as rep


def _report(criterion: str, rows: list[rep.CheckRow]) -> None:
    ok = all(r.passed for r in rows)
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({len(rows)} checks)")
    for r in rows:
        if not r.passed:
            print(f"  failed: {r.case}: expected {r.expected}, got {r.actual}")
    assert ok


def test_criterion_1_density_table():
    _report("1", rep.check_density_table())


def test_criterion_2_families():
    _report("2", rep.check_families())


def test_criterion_3_minimax_k24():
    _report("3", rep.check_minimax())


def test_criterion_4_crossing_lemma_constants():
    _report("4", rep.check_constants())


def test_criterion_5_crossing_bound_inequalities():
    _report("5", rep.check_crossing_bounds())


def test_criterion_6_pathwidth():
    _report("6", rep.check_pathwidth())


def test_criterion_7_quasiplanarity_relationship():
    _report("7", rep.check_relationship())


def test_criterion_8_oracle_equivalence():
    _report("8", rep.check_oracle_equivalence())


def test_criterion_9_reproduce_cli():
    proc = subprocess.run(
        [sys.executable, "-m", "layerlens.cli", "reproduce"],
        capture_output=True,
        text=True,
        timeout=600,
    )
    lines = proc.stdout.strip().splitlines()
    ok = proc.returncode == 0
    print(f"criterion 9: {'PASS' if ok else 'FAIL'} (exit {proc.returncode}, {len(lines)} lines)")
    assert lines[0] == "criterion,case,expected,actual,pass"
    assert all(line.endswith(",pass") for line in lines[1:-1])
    assert lines[-1] == f"all {len(lines) - 2} checks pass"
    assert ok, proc.stderr
