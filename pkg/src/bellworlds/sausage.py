"""Classical many-worlds sausage model: one shared world angle per pair.

A pair's cross-section circle is cut by each analyzer into four wedges; a
uniformly random "definite result" angle rho picks the one wedge that is
actually experienced.  Because rho is drawn at creation (before anyone
picks settings) this is an instruction-set model in disguise: the expected
counters follow the wedge volumes V(AB) of geometry.world_volumes, and the
Bell margin at the default angles is exactly zero.

The module also grows the model's fiber refinement: a non-negative density
f on [0, pi/2] (angle measured from the analyzer's own axis line)
discretized into weighted fibers, replicated over the four wedges of the
circle, Alice's laid out counterclockwise from her axis and Bob's
clockwise from his.  match_fibers exhibits the failure mode of fusing the
two independently grown sets into joint worlds: paired weights only agree
where f(tau) = f(tau - delta), so any non-constant profile leaves weight
dangling as soon as the axes separate.
"""

from __future__ import annotations

import io
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .geometry import (
    OUTCOME_LABELS,
    TAU,
    AngleConfig,
    BellAngles,
    Outcome,
    alice_outcomes,
    bob_outcomes,
    classify_world,
    normalize,
    world_volumes,
)
from .lrm import CounterTable

HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class DRVector:
    """The one actual-world angle, drawn before any setting exists."""

    rho: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "rho", normalize(self.rho))


def sample_dr(rng: np.random.Generator) -> DRVector:
    """Uniform world angle on [0, 2*pi)."""
    return DRVector(rng.random() * TAU)


def sample_dr_many(rng: np.random.Generator, size: int) -> np.ndarray:
    """Vectorized sample_dr.  Callers must draw these before the configs."""
    return rng.random(size) * TAU


def sausage_run(dr: DRVector, config: AngleConfig) -> Outcome:
    """Outcome of one pair: classify the pre-drawn world angle.

    The signature forces the ordering: a DRVector must exist before any
    config is applied to it, so the rho draw cannot observe the settings.
    """
    return classify_world(dr.rho, config)


def volume_counters(bell: BellAngles, n_total: float) -> CounterTable:
    """Expected counters (n_total/4) * V(AB) per settings pair.

    At the default angles the wedge volumes cancel exactly in the Bell
    margin: 30 - (10 + 20) = 0 at n_total = 160.
    """
    table = CounterTable()
    quarter = n_total / 4.0
    for k, config in enumerate(bell.configs()):
        vols = world_volumes(config.delta).by_label()
        for j, label in enumerate(OUTCOME_LABELS):
            table.counts[k, j] = quarter * vols[label]
    return table


def fold_to_axis(theta: float | np.ndarray) -> float | np.ndarray:
    """Angular distance from the nearest analyzer axis line, in [0, pi/2].

    The axis and the orthogonal cut repeat every pi; folding makes the
    density profile an even function of the offset, so the same value is
    read whether the offset is measured clockwise or counterclockwise.
    """
    r = np.mod(theta, math.pi)
    return np.minimum(r, math.pi - r)


@dataclass(frozen=True)
class DensityFn:
    """Fiber number density f on [0, pi/2], tabulated and linearly interpolated.

    Normalized on construction so the total over the four wedges is the
    fiber budget: 4 * integral of f over [0, pi/2] equals z_total.
    """

    tau: np.ndarray
    values: np.ndarray
    z_total: float

    def __post_init__(self) -> None:
        tau = np.asarray(self.tau, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if tau.ndim != 1 or tau.size < 2 or values.shape != tau.shape:
            raise ValueError("density table needs matching 1-d tau and value arrays, >= 2 points")
        if np.any(np.diff(tau) <= 0.0):
            raise ValueError("tau grid must be strictly increasing")
        if tau[0] < 0.0 or tau[-1] > HALF_PI + 1e-12:
            raise ValueError("tau grid must lie within [0, pi/2]")
        if not (np.all(np.isfinite(values)) and np.all(values >= 0.0)):
            raise ValueError("density values must be finite and non-negative")
        if self.z_total <= 0.0:
            raise ValueError("fiber budget z_total must be positive")
        # np.interp clamps outside the table, so the interpolant extends
        # constantly to the domain edges; its exact integral over [0, pi/2]:
        integral = np.trapezoid(values, tau) + values[0] * tau[0] + values[-1] * (HALF_PI - tau[-1])
        # reject zero and subnormal mass alike: below this floor the
        # renormalization factor would overflow
        if not integral > self.z_total / 4.0 / sys.float_info.max:
            raise ValueError("density must have positive total mass")
        values = values * (self.z_total / (4.0 * integral))
        tau.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "values", values)

    def __call__(self, t: float | np.ndarray) -> float | np.ndarray:
        return np.interp(t, self.tau, self.values)

    def at_angle(self, theta: float | np.ndarray) -> float | np.ndarray:
        """Density at a signed offset from the axis, any magnitude."""
        return self(fold_to_axis(theta))

    @classmethod
    def constant(cls, z_total: float = 400.0) -> "DensityFn":
        c = z_total / TAU
        return cls(tau=np.array([0.0, HALF_PI]), values=np.array([c, c]), z_total=z_total)

    @classmethod
    def from_table(cls, tau, values, z_total: float = 400.0) -> "DensityFn":
        return cls(tau=np.asarray(tau, dtype=float), values=np.asarray(values, dtype=float), z_total=z_total)

    @classmethod
    def from_text(cls, text: str, z_total: float = 400.0) -> "DensityFn":
        """Two whitespace-separated columns per line: tau, f(tau)."""
        data = np.loadtxt(io.StringIO(text), dtype=float, ndmin=2)
        if data.shape[1] != 2:
            raise ValueError(f"density table must have 2 columns, got {data.shape[1]}")
        return cls.from_table(data[:, 0], data[:, 1], z_total)

    @classmethod
    def from_file(cls, path: str | Path, z_total: float = 400.0) -> "DensityFn":
        return cls.from_text(Path(path).read_text(), z_total)


@dataclass(frozen=True)
class FiberSet:
    """Weighted fibers of one side, replicated over the four wedges.

    Cell c of wedge q holds the density at tau = (c + 0.5) * cell_width,
    where tau is the distance from the axis line within that wedge; the
    global position applies the side's chirality (Alice counterclockwise,
    Bob clockwise).  rho and weights are flat arrays in (q, c) order.
    """

    rho: np.ndarray
    weights: np.ndarray
    origin: str
    axis: float
    m: int
    density: DensityFn

    def __post_init__(self) -> None:
        self.rho.setflags(write=False)
        self.weights.setflags(write=False)

    @property
    def cell_width(self) -> float:
        return HALF_PI / self.m

    @property
    def total_weight(self) -> float:
        return float(self.weights.sum())

    def weights_by_quadrant(self) -> np.ndarray:
        return self.weights.reshape(4, self.m)

    def fibers(self):
        """Iterate (rho, origin, weight) tuples."""
        for r, w in zip(self.rho, self.weights):
            yield (float(r), self.origin, float(w))


def grow_fibers(density: DensityFn, side: str, axis: float, m: int = 1024) -> FiberSet:
    """Discretize a density into 4*m weighted fibers around one analyzer.

    The fiber at (wedge q, cell c) sits at angular distance
    tau_c = (c + 0.5) * (pi/2)/m from the axis line, i.e. at global angle
    axis + chirality * theta(q, tau_c) with theta walking outward from the
    axis line in each wedge.  Weights are f(tau_c) * cell_width, rescaled
    so the set's total is exactly the budget z_total.
    """
    if side not in ("alice", "bob"):
        raise ValueError(f"side must be 'alice' or 'bob', got {side!r}")
    if m < 1:
        raise ValueError("m must be >= 1")
    width = HALF_PI / m
    tau_c = (np.arange(m) + 0.5) * width
    # wedge-local distance -> circle offset: wedges 0..3 alternate direction
    # so tau = 0 always touches the axis line (theta = 0, pi, pi, 2*pi).
    theta = np.concatenate([tau_c, math.pi - tau_c, math.pi + tau_c, TAU - tau_c])
    sign = 1.0 if side == "alice" else -1.0
    rho = np.mod(axis + sign * theta, TAU)
    cell_weight = np.asarray(density(tau_c), dtype=float) * width
    if not np.all(np.isfinite(cell_weight)):
        raise ValueError("density produced non-finite fiber weights")
    weights = np.tile(cell_weight, 4)
    total = weights.sum()
    if total <= 0.0:
        raise ValueError("fiber grid resolves no density mass; increase m or widen the table")
    weights = weights * (density.z_total / total)
    return FiberSet(rho=rho, weights=weights, origin=side, axis=axis, m=m, density=density)


@dataclass(frozen=True)
class MatchResult:
    """Outcome-labeled weight of fused fiber pairs, plus the dangling rest."""

    matched: dict[str, float]
    dangling: float

    @property
    def matched_total(self) -> float:
        return float(sum(self.matched.values()))


def match_fibers(alice: FiberSet, bob: FiberSet, tol: float | None = None) -> MatchResult:
    """Fuse Alice and Bob fibers into joint worlds where they agree.

    A pair fuses when the global angles agree within tol (default half a
    grid cell, so every fiber finds its nearest counterpart cell) and the
    weights agree within relative 1e-9.  Everything else is dangling: with
    the default tol that is exactly the weight-mismatch failure mode, since
    the paired weights are f(tau) and f(tau - delta) read at the same
    global angle.
    """
    if alice.origin != "alice" or bob.origin != "bob":
        raise ValueError("match_fibers expects (alice-grown, bob-grown) sets in that order")
    if alice.m != bob.m:
        raise ValueError(f"fiber grids disagree: m = {alice.m} vs {bob.m}")
    width = alice.cell_width
    if tol is None:
        tol = width / 2.0
    n_cells = 4 * alice.m

    def to_cells(fs: FiberSet) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        u = np.mod(fs.rho - alice.axis, TAU) / width - 0.5
        j = np.rint(u).astype(np.int64)
        dist = np.abs(u - j) * width
        return np.mod(j, n_cells), dist, fs.weights

    w_alice = np.zeros(n_cells)
    w_bob = np.zeros(n_cells)
    for accum, fs in ((w_alice, alice), (w_bob, bob)):
        j, dist, w = to_cells(fs)
        keep = dist <= tol
        np.add.at(accum, j[keep], w[keep])

    both = (w_alice > 0.0) & (w_bob > 0.0)
    agree = np.abs(w_alice - w_bob) <= 1e-9 * np.maximum(w_alice, w_bob)
    fused = both & agree

    centers = np.mod(alice.axis + (np.arange(n_cells) + 0.5) * width, TAU)
    labels = 2 * alice_outcomes(centers, alice.axis) + bob_outcomes(centers, bob.axis)
    matched = {label: 0.0 for label in OUTCOME_LABELS}
    for k in range(4):
        matched[OUTCOME_LABELS[k]] = float(w_alice[fused & (labels == k)].sum())
    matched_total = sum(matched.values())
    dangling = alice.total_weight + bob.total_weight - 2.0 * matched_total
    return MatchResult(matched=matched, dangling=float(dangling))
