"""Shared fixtures: an in-process CLI runner and the frozen outcome table."""

from __future__ import annotations

import contextlib
import io

import pytest

from bellworlds.cli import main as cli_main

# The full 8x4 instruction outcome table, transcribed by hand and frozen.
# Rows are classes i = 0..7, columns the settings pairs (01, 02, 11, 12).
FROZEN_OUTCOME_ROWS = {
    0: ("10", "10", "10", "10"),
    1: ("10", "11", "10", "11"),
    2: ("11", "10", "01", "00"),
    3: ("11", "11", "01", "01"),
    4: ("00", "00", "10", "10"),
    5: ("00", "01", "10", "11"),
    6: ("01", "00", "01", "00"),
    7: ("01", "01", "01", "01"),
}

# The same table regrouped by outcome, as class_configpair tags.
FROZEN_GROUPS = {
    "10": {"0_01", "0_02", "0_11", "0_12", "1_01", "1_11", "2_02", "4_11", "4_12", "5_11"},
    "00": {"2_12", "4_01", "4_02", "5_01", "6_02", "6_12"},
    "11": {"1_02", "1_12", "2_01", "3_01", "3_02", "5_12"},
    "01": {"2_11", "3_11", "3_12", "5_02", "6_01", "6_11", "7_01", "7_02", "7_11", "7_12"},
}


@pytest.fixture
def run_cli():
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""

    def _run(argv: list[str]) -> tuple[int, str, str]:
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = cli_main(argv)
        return code, out.getvalue(), err.getvalue()

    return _run
