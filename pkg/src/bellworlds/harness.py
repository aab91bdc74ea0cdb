"""Experiment harness: scheduling, samplers, Bell statistic, sweeps, reports.

One Schedule fixes everything about a simulated session: which world
model answers the detectors, how many runs, and the seed.  Each run draws
one of the four settings pairs uniformly, asks the model for an outcome
pair, and increments a CounterTable; the Bell statistic then compares
N_02(U) against N_01(U) + N_12(E) with a binomial error bar.

Reproducibility contract: identical schedules produce identical tables,
and a run can be split over seed-derived sub-streams whose summed
counters equal the sharded run exactly (substream i of k is child i of
the seed's spawn sequence, so shard layouts are stable).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .branching import branch_probabilities, quadrant_rebranch
from .geometry import (
    OUTCOME_LABELS,
    TAU,
    BellAngles,
    Outcome,
    alice_outcomes,
    bob_outcomes,
    classify_indices,
)
from .lrm import (
    CONFIG_PAIRS,
    BellReport,
    ClassWeights,
    CounterTable,
    bell_check,
    outcome_grid,
    sample_classes,
)
from .svgplot import render_sweep_svg

MODELS = ("quantum", "lrm", "sausage", "branch")


@dataclass(frozen=True)
class Schedule:
    """Full description of one simulated session."""

    model: str
    n_total: int = 160
    seed: int = 0
    bell: BellAngles = BellAngles()
    weights: ClassWeights | None = None
    z_tilde: int = 10**6

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.n_total < 4:
            raise ValueError(f"n_total must be >= 4, got {self.n_total}")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")
        if self.z_tilde < 1:
            raise ValueError("rebranch multiplier must be >= 1")

    def class_weights(self) -> ClassWeights:
        return self.weights if self.weights is not None else ClassWeights.uniform()


def substream(seed: int, index: int, count: int) -> np.random.Generator:
    """Child stream index of count derived from seed.

    Child i is a function of (seed, i) only, so the same shard re-runs
    identically regardless of how many siblings it was created with.
    """
    if not 0 <= index < count:
        raise ValueError(f"substream index {index} outside [0, {count})")
    return np.random.default_rng(np.random.SeedSequence(seed).spawn(count)[index])


def born_sample(delta: float, rng: np.random.Generator) -> Outcome:
    """One outcome pair from the quantum coincidence law.

    E with probability sin^2(delta), U otherwise; within each class the
    two members are equiprobable.  Consumes exactly two uniforms.
    """
    equal = rng.random() < math.sin(delta) ** 2
    first = rng.random() < 0.5
    if equal:
        return Outcome(0, 0) if first else Outcome(1, 1)
    return Outcome(0, 1) if first else Outcome(1, 0)


def _branch_rows(bell: BellAngles, z_tilde: int) -> np.ndarray:
    """Per-config outcome probabilities from the rebranch counts."""
    rows = np.empty((4, 4))
    for k, config in enumerate(bell.configs()):
        probs = branch_probabilities(quadrant_rebranch(config.delta, z_tilde))
        rows[k] = [probs[label] for label in OUTCOME_LABELS]
    return rows


def shard_counters(schedule: Schedule, shard_index: int, n_shards: int) -> CounterTable:
    """Counters for one shard of a schedule, on its own sub-stream.

    Shard i of k handles floor(n/k) runs plus one of the first n mod k
    remainders.  Draw order per model is part of the contract (it pins
    byte-level reproducibility): the model's per-pair hidden state is
    drawn before the settings for the stamped models (lrm, sausage) and
    after them for the measurement-driven ones (quantum, branch).
    """
    if n_shards < 1:
        raise ValueError("n_shards must be >= 1")
    base, rem = divmod(schedule.n_total, n_shards)
    n = base + (1 if shard_index < rem else 0)
    rng = substream(schedule.seed, shard_index, n_shards)
    if n == 0:
        return CounterTable()
    bell = schedule.bell
    deltas = np.array([config.delta for config in bell.configs()])

    if schedule.model == "quantum":
        configs = rng.integers(0, 4, n)
        equal = rng.random(n) < np.sin(deltas[configs]) ** 2
        first = rng.random(n) < 0.5
        a = np.where(first, 0, 1)
        b = np.where(equal, a, 1 - a)
        idx = 2 * a + b
    elif schedule.model == "lrm":
        classes = sample_classes(schedule.class_weights(), rng, n)
        configs = rng.integers(0, 4, n)
        idx = outcome_grid()[classes, configs]
    elif schedule.model == "sausage":
        rho = rng.random(n) * TAU
        configs = rng.integers(0, 4, n)
        idx = np.empty(n, dtype=np.int64)
        for k, config in enumerate(bell.configs()):
            mask = configs == k
            idx[mask] = classify_indices(rho[mask], config)
    else:  # branch
        configs = rng.integers(0, 4, n)
        u = rng.random(n)
        cum = np.cumsum(_branch_rows(bell, schedule.z_tilde), axis=1)
        idx = np.argmax(u[:, None] < cum[configs], axis=1)

    counts = np.bincount(configs * 4 + idx, minlength=16).reshape(4, 4)
    return CounterTable(counts.astype(float))


def run_experiment(schedule: Schedule, n_shards: int = 1) -> CounterTable:
    """Run a schedule, optionally as summed sub-stream shards."""
    table = CounterTable()
    for i in range(n_shards):
        table = table + shard_counters(schedule, i, n_shards)
    return table


def bell_statistic(table: CounterTable) -> BellReport:
    """bell_check plus a sigma from independent binomial variances.

    Each of the three terms is a binomial count at its config's sample
    size; the configs are drawn independently, so the variances add.
    """
    base = bell_check(table)
    var = 0.0
    for (a, b), count in (
        ((0, 2), table.unequal_count(0, 2)),
        ((0, 1), table.unequal_count(0, 1)),
        ((1, 2), table.equal_count(1, 2)),
    ):
        n_ab = table.config_total(a, b)
        if n_ab > 0.0:
            p = count / n_ab
            var += n_ab * p * (1.0 - p)
    return BellReport(
        lhs=base.lhs,
        rhs=base.rhs,
        margin=base.margin,
        violated=base.violated,
        sigma=math.sqrt(var),
    )


@dataclass(frozen=True)
class SweepPoint:
    """P(E) at one separation: the model's value and both reference laws."""

    delta: float
    p_model: float
    p_born: float
    p_volume: float | None


@dataclass(frozen=True)
class SweepCurve:
    model: str
    points: tuple[SweepPoint, ...]

    def __len__(self) -> int:
        return len(self.points)

    def deltas(self) -> np.ndarray:
        return np.array([p.delta for p in self.points])


def sweep(
    model: str,
    delta_grid: Iterable[float],
    n_per_point: int,
    seed: int,
    z_tilde: int = 10**6,
) -> SweepCurve:
    """Empirical P(E) on a separation grid, one sub-stream per point.

    quantum and sausage are Monte Carlo at n_per_point runs; branch is
    the exact count ratio of the rebranched ensemble, so n_per_point is
    ignored there.  The instruction model is refused: its statistics are
    defined jointly at the four settings pairs, not per separation.
    """
    if model == "lrm":
        raise ValueError("the instruction model has no per-separation curve; run it through run_experiment")
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")
    grid = [float(d) for d in delta_grid]
    if model in ("quantum", "sausage") and grid and n_per_point < 1:
        raise ValueError("n_per_point must be >= 1 for Monte Carlo sweeps")
    points = []
    for i, d in enumerate(grid):
        if model == "quantum":
            rng = substream(seed, i, len(grid))
            p_model = float(np.mean(rng.random(n_per_point) < math.sin(d) ** 2))
        elif model == "sausage":
            rng = substream(seed, i, len(grid))
            rho = rng.random(n_per_point) * TAU
            outcome_a = alice_outcomes(rho, 0.0)
            outcome_b = bob_outcomes(rho, d)
            p_model = float(np.mean(outcome_a == outcome_b))
        else:
            probs = branch_probabilities(quadrant_rebranch(d, z_tilde))
            p_model = probs["00"] + probs["11"]
        p_volume = 2.0 * abs(d) / math.pi if abs(d) <= math.pi / 2.0 else None
        points.append(
            SweepPoint(delta=d, p_model=p_model, p_born=math.sin(d) ** 2, p_volume=p_volume)
        )
    return SweepCurve(model=model, points=tuple(points))


def emit_report(obj: CounterTable | SweepCurve, fmt: str = "csv") -> str:
    """Serialize a counter table or sweep curve, stable order, round-trip safe."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown report format {fmt!r}; expected csv or json")
    if isinstance(obj, CounterTable):
        return _counters_csv(obj) if fmt == "csv" else _counters_json(obj)
    if isinstance(obj, SweepCurve):
        return _sweep_csv(obj) if fmt == "csv" else _sweep_json(obj)
    raise TypeError(f"cannot report a {type(obj).__name__}")


def _counters_csv(table: CounterTable) -> str:
    lines = ["a,b,outcome,count"]
    for a, b in CONFIG_PAIRS:
        for label in OUTCOME_LABELS:
            lines.append(f"{a},{b},{label},{table.count(a, b, label)!r}")
    for a, b in CONFIG_PAIRS:
        lines.append(f"{a},{b},total,{table.config_total(a, b)!r}")
    return "\n".join(lines) + "\n"


def _counters_json(table: CounterTable) -> str:
    rows = [
        {"a": a, "b": b, "outcome": label, "count": table.count(a, b, label)}
        for a, b in CONFIG_PAIRS
        for label in OUTCOME_LABELS
    ]
    totals = [{"a": a, "b": b, "count": table.config_total(a, b)} for a, b in CONFIG_PAIRS]
    doc = {"type": "counters", "rows": rows, "totals": totals}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _sweep_csv(curve: SweepCurve) -> str:
    lines = ["model,delta,p_model,p_born,p_volume"]
    for p in curve.points:
        vol = "" if p.p_volume is None else repr(p.p_volume)
        lines.append(f"{curve.model},{p.delta!r},{p.p_model!r},{p.p_born!r},{vol}")
    return "\n".join(lines) + "\n"


def _sweep_json(curve: SweepCurve) -> str:
    doc = {
        "type": "sweep",
        "model": curve.model,
        "points": [
            {
                "delta": p.delta,
                "p_model": p.p_model,
                "p_born": p.p_born,
                "p_volume": p.p_volume,
            }
            for p in curve.points
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_counter_report(text: str) -> CounterTable:
    """Inverse of emit_report for counter tables, either format."""
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        if doc.get("type") != "counters":
            raise ValueError(f"expected a counters document, got type {doc.get('type')!r}")
        rows = doc["rows"]
        cells = {(r["a"], r["b"], r["outcome"]): float(r["count"]) for r in rows}
    else:
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines or lines[0] != "a,b,outcome,count":
            raise ValueError("counter csv must start with header a,b,outcome,count")
        cells = {}
        for line in lines[1:]:
            a_str, b_str, label, count = line.split(",")
            if label == "total":
                continue
            cells[(int(a_str), int(b_str), label)] = float(count)
    table = CounterTable()
    for k, (a, b) in enumerate(CONFIG_PAIRS):
        for j, label in enumerate(OUTCOME_LABELS):
            table.counts[k, j] = cells[(a, b, label)]
    return table


def parse_sweep_report(text: str) -> SweepCurve:
    """Inverse of emit_report for sweep curves, either format."""
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        if doc.get("type") != "sweep":
            raise ValueError(f"expected a sweep document, got type {doc.get('type')!r}")
        points = tuple(
            SweepPoint(
                delta=float(p["delta"]),
                p_model=float(p["p_model"]),
                p_born=float(p["p_born"]),
                p_volume=None if p["p_volume"] is None else float(p["p_volume"]),
            )
            for p in doc["points"]
        )
        return SweepCurve(model=doc["model"], points=points)
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != "model,delta,p_model,p_born,p_volume":
        raise ValueError("sweep csv must start with header model,delta,p_model,p_born,p_volume")
    model = None
    points = []
    for line in lines[1:]:
        m, d, pm, pb, pv = line.split(",")
        if model is None:
            model = m
        elif m != model:
            raise ValueError(f"sweep csv mixes models {model!r} and {m!r}")
        points.append(
            SweepPoint(
                delta=float(d),
                p_model=float(pm),
                p_born=float(pb),
                p_volume=None if pv == "" else float(pv),
            )
        )
    if model is None:
        raise ValueError("sweep csv has no data rows")
    return SweepCurve(model=model, points=tuple(points))


def emit_plot(curve: SweepCurve, path: str | Path) -> None:
    """Write the sweep as a standalone SVG with both reference curves."""
    if not curve.points:
        raise ValueError("cannot plot an empty sweep")
    Path(path).write_text(render_sweep_svg(curve))
