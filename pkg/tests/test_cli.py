"""Command-line surface: subcommands, formats, error contract."""

import json
import subprocess
import sys

import pytest

from bellworlds.geometry import CONFIG_PAIRS
from bellworlds.harness import parse_counter_report, parse_sweep_report
from bellworlds.lrm import format_outcome_table


def test_run_defaults(run_cli):
    code, out, err = run_cli(["run", "--model", "quantum"])
    assert code == 0
    table = parse_counter_report(out)
    assert table.total == 160.0
    assert err.startswith("bell: ")
    assert "margin=" in err


def test_run_json_output(run_cli):
    code, out, _ = run_cli(["run", "--model", "sausage", "--n", "200", "--seed", "4", "--out", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["type"] == "counters"
    assert parse_counter_report(out).total == 200.0


def test_run_lrm_weights(run_cli):
    # uniform weights put mass on classes 1 and 6, so the expected margin
    # is -n/8, far below sampling noise
    args = ["run", "--model", "lrm", "--n", "4000", "--seed", "1",
            "--weights", "20,20,20,20,20,20,20,20"]
    code, _, err = run_cli(args)
    assert code == 0
    assert "violated=False" in err


def test_run_branch_ztilde(run_cli):
    code, out, err = run_cli(["run", "--model", "branch", "--n", "4000", "--seed", "2",
                              "--ztilde", "100000"])
    assert code == 0
    assert parse_counter_report(out).total == 4000.0
    assert "violated=True" in err


def test_run_angle_override_in_degrees(run_cli):
    # equal axes everywhere: each config has delta 0, so equal outcomes
    # are impossible and every E-row count is exactly zero
    code, out, _ = run_cli(["run", "--model", "quantum", "--n", "400", "--seed", "0",
                            "--angles", "0,0,0", "--degrees"])
    assert code == 0
    table = parse_counter_report(out)
    assert table.total == 400.0
    assert sum(table.equal_count(a, b) for a, b in CONFIG_PAIRS) == 0.0


def test_run_rejects_misplaced_options(run_cli):
    code, out, err = run_cli(["run", "--model", "quantum", "--weights", "1,1,1,1,1,1,1,1"])
    assert code == 2 and out == ""
    assert json.loads(err.strip())["error"]
    code, _, err = run_cli(["run", "--model", "lrm", "--ztilde", "7"])
    assert code == 2
    assert "--ztilde" in json.loads(err.strip())["error"]


def test_run_rejects_unknown_model(run_cli):
    code, _, err = run_cli(["run", "--model", "psychic"])
    assert code == 2
    assert "invalid choice" in json.loads(err.strip())["error"]


def test_run_rejects_bad_angles(run_cli):
    code, _, err = run_cli(["run", "--model", "quantum", "--angles", "1,2"])
    assert code == 2
    assert "--angles" in json.loads(err.strip())["error"]


def test_sweep_csv_round_trip(run_cli):
    code, out, _ = run_cli(["sweep", "--model", "branch", "--grid", "0:1.5707963267948966:5",
                            "--n", "1", "--seed", "0"])
    assert code == 0
    curve = parse_sweep_report(out)
    assert curve.model == "branch"
    assert len(curve) == 5
    assert curve.points[-1].p_model == 1.0


def test_sweep_plot_written(run_cli, tmp_path):
    path = tmp_path / "sweep.svg"
    code, _, err = run_cli(["sweep", "--model", "sausage", "--grid", "0:1.5:4",
                            "--n", "2000", "--plot", str(path)])
    assert code == 0
    assert path.exists() and "<svg" in path.read_text()
    assert f"plot written to {path}" in err


def test_sweep_clamps_grid(run_cli):
    code, out, err = run_cli(["sweep", "--model", "quantum", "--grid", "0:3.0:4", "--n", "50"])
    assert code == 0
    assert "clamped" in err
    curve = parse_sweep_report(out)
    assert all(abs(p.delta) <= 1.5707963267948966 for p in curve.points)


def test_sweep_grid_in_degrees(run_cli):
    code, out, _ = run_cli(["sweep", "--model", "branch", "--grid", "0:90:3",
                            "--n", "1", "--degrees"])
    assert code == 0
    curve = parse_sweep_report(out)
    assert curve.points[-1].delta == pytest.approx(1.5707963267948966)


def test_sweep_rejects_lrm(run_cli):
    code, _, err = run_cli(["sweep", "--model", "lrm", "--grid", "0:1:3"])
    assert code == 2
    assert "instruction model" in json.loads(err.strip())["error"]


def test_sweep_rejects_bad_grid(run_cli):
    for bad in ("0:1", "a:b:c", "0:1:0"):
        code, _, err = run_cli(["sweep", "--model", "quantum", "--grid", bad])
        assert code == 2
        assert json.loads(err.strip())["error"]


def test_audit_text(run_cli):
    code, out, _ = run_cli(["audit"])
    assert code == 0
    assert out == (
        "choice_vs_remote_measure.alice: spacelike\n"
        "choice_vs_remote_measure.bob: spacelike\n"
        "settings_reach_creation: false\n"
        "creation_in_branch_of_settings: true\n"
    )


def test_audit_json(run_cli):
    code, out, _ = run_cli(["audit", "--L", "2.0", "--tchoice", "0.5", "--out", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["choice_vs_remote_measure"] == {"alice": "spacelike", "bob": "spacelike"}
    assert doc["settings_reach_creation"] is False


def test_audit_rejects_late_choice(run_cli):
    code, _, err = run_cli(["audit", "--tchoice", "2.0"])
    assert code == 2
    assert "t_choice" in json.loads(err.strip())["error"]


def test_table_output(run_cli):
    code, out, _ = run_cli(["table"])
    assert code == 0
    assert out == format_outcome_table() + "\n"
    assert "group (01), 10 entries" in out


def test_missing_subcommand_is_an_error(run_cli):
    code, _, err = run_cli([])
    assert code == 2
    assert json.loads(err.strip())["error"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bellworlds", "audit"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "settings_reach_creation: false" in proc.stdout
