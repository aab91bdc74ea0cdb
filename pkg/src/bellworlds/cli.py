"""Command-line front end: run, sweep, audit, table.

Machine-oriented contract: reports go to stdout (csv or json, byte-stable
for identical arguments), human-facing notes and the Bell summary go to
stderr, and every failure prints a single json error line to stderr and
exits 2.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .geometry import BellAngles
from .harness import (
    MODELS,
    Schedule,
    bell_statistic,
    emit_plot,
    emit_report,
    run_experiment,
    sweep,
)
from .lightcone import build_schedule, causal_audit
from .lrm import ClassWeights, format_outcome_table

HALF_PI = math.pi / 2.0


class CliError(Exception):
    """Anything that should become the json error line and exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse hook
        raise CliError(message)


def _parse_angles(text: str, degrees: bool) -> BellAngles:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise CliError(f"--angles needs 3 comma-separated values, got {len(parts)}")
    try:
        values = [float(p) for p in parts]
    except ValueError as e:
        raise CliError(f"bad --angles value: {e}")
    if degrees:
        values = [math.radians(v) for v in values]
    return BellAngles(phi0=values[0], phi1=values[1], phi2=values[2])


def _parse_grid(text: str, degrees: bool) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise CliError(f"--grid must look like start:stop:steps, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        steps = int(parts[2])
    except ValueError as e:
        raise CliError(f"bad --grid value: {e}")
    if steps < 1:
        raise CliError("--grid needs at least 1 step")
    if degrees:
        start, stop = math.radians(start), math.radians(stop)
    return np.linspace(start, stop, steps)


def _cmd_run(args: argparse.Namespace) -> int:
    if args.weights is not None and args.model != "lrm":
        raise CliError("--weights applies only to --model lrm")
    if args.ztilde is not None and args.model != "branch":
        raise CliError("--ztilde applies only to --model branch")
    weights = None if args.weights is None else ClassWeights.from_string(args.weights)
    bell = BellAngles() if args.angles is None else _parse_angles(args.angles, args.degrees)
    schedule = Schedule(
        model=args.model,
        n_total=args.n,
        seed=args.seed,
        bell=bell,
        weights=weights,
        z_tilde=args.ztilde if args.ztilde is not None else 10**6,
    )
    table = run_experiment(schedule)
    report = bell_statistic(table)
    sys.stdout.write(emit_report(table, args.out))
    sig = "nan" if report.significance is None else f"{report.significance:.3f}"
    sys.stderr.write(
        f"bell: lhs={report.lhs:g} rhs={report.rhs:g} margin={report.margin:g} "
        f"sigma={report.sigma:.3f} significance={sig} violated={report.violated}\n"
    )
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    grid = _parse_grid(args.grid, args.degrees)
    clipped = np.clip(grid, -HALF_PI, HALF_PI)
    if not np.array_equal(clipped, grid):
        sys.stderr.write("note: grid clamped to [-pi/2, pi/2]\n")
        grid = clipped
    curve = sweep(args.model, grid.tolist(), args.n, args.seed)
    sys.stdout.write(emit_report(curve, args.out))
    if args.plot is not None:
        emit_plot(curve, args.plot)
        sys.stderr.write(f"plot written to {args.plot}\n")
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    log = build_schedule(half_length=args.L, t_choice=args.tchoice)
    report = causal_audit(log)
    if args.out == "json":
        doc = {
            "choice_vs_remote_measure": report.choice_vs_remote_measure,
            "settings_reach_creation": report.settings_reach_creation,
            "creation_in_branch_of_settings": report.creation_in_branch_of_settings,
        }
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        for side in ("alice", "bob"):
            kind = report.choice_vs_remote_measure[side]
            sys.stdout.write(f"choice_vs_remote_measure.{side}: {kind}\n")
        sys.stdout.write(
            f"settings_reach_creation: {str(report.settings_reach_creation).lower()}\n"
        )
        sys.stdout.write(
            f"creation_in_branch_of_settings: "
            f"{str(report.creation_in_branch_of_settings).lower()}\n"
        )
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    sys.stdout.write(format_outcome_table() + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bellworlds",
        description="Simulate four world models of an entangled-pair experiment "
        "and check them against the Bell inequality.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one schedule and print its counter table")
    run_p.add_argument("--model", required=True, choices=MODELS)
    run_p.add_argument("--n", type=int, default=160, help="total runs (default 160)")
    run_p.add_argument("--seed", type=int, default=0)
    run_p.add_argument("--weights", default=None, help="8 comma-separated class counts (lrm only)")
    run_p.add_argument("--ztilde", type=int, default=None, help="rebranch multiplier (branch only)")
    run_p.add_argument("--angles", default=None, help="3 comma-separated analyzer angles")
    run_p.add_argument("--degrees", action="store_true", help="interpret --angles in degrees")
    run_p.add_argument("--out", choices=("csv", "json"), default="csv")
    run_p.set_defaults(func=_cmd_run)

    sweep_p = sub.add_parser("sweep", help="empirical P(E) over a separation grid")
    sweep_p.add_argument("--model", required=True, choices=MODELS)
    sweep_p.add_argument("--grid", required=True, help="start:stop:steps (radians)")
    sweep_p.add_argument("--n", type=int, default=10000, help="runs per grid point")
    sweep_p.add_argument("--seed", type=int, default=0)
    sweep_p.add_argument("--plot", default=None, help="also write an svg to this path")
    sweep_p.add_argument("--degrees", action="store_true", help="interpret --grid in degrees")
    sweep_p.add_argument("--out", choices=("csv", "json"), default="csv")
    sweep_p.set_defaults(func=_cmd_sweep)

    audit_p = sub.add_parser("audit", help="causal audit of the event schedule")
    audit_p.add_argument("--L", type=float, default=1.0, help="half separation (Alice at -L)")
    audit_p.add_argument("--tchoice", type=float, default=None, help="choice time (default L/2)")
    audit_p.add_argument("--out", choices=("text", "json"), default="text")
    audit_p.set_defaults(func=_cmd_audit)

    table_p = sub.add_parser("table", help="print the 8x4 instruction outcome table")
    table_p.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as e:
        sys.stderr.write(json.dumps({"error": str(e)}) + "\n")
        return 2
    except (ValueError, OSError) as e:
        sys.stderr.write(json.dumps({"error": str(e)}) + "\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
