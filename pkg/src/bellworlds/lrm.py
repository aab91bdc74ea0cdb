"""Instruction-set model: each pair carries preset answers for every setting.

A pair is stamped at creation with a triple (A0, B1, B2) of bits: Alice's
answer at setting 0, Bob's answers at settings 1 and 2.  Perfect
anti-correlation at equal settings forces Alice's answer at setting 1 to be
A1 = 1 - B1, so three bits exhaust the local hidden state and there are
exactly eight classes, indexed i = 4*(1 - A0) + 2*B1 + B2.

Because the settings pair is drawn after the pairs are stamped (and the
draw cannot reach back in time; see lightcone.causal_audit), each class
spreads evenly over the four configs, and the resulting expected counters
obey the inequality N_02(U) <= N_01(U) + N_12(E) for every weight vector:
the margin identity is margin = -(N1 + N6)/2 <= 0.

This module also owns the CounterTable / BellReport plumbing shared by all
four models.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .geometry import CONFIG_PAIRS, OUTCOME_LABELS, AngleConfig, BellAngles, Outcome

CONFIG_INDEX = {pair: k for k, pair in enumerate(CONFIG_PAIRS)}
OUTCOME_INDEX = {label: k for k, label in enumerate(OUTCOME_LABELS)}


@dataclass(frozen=True)
class InstructionTriple:
    """The three free bits of one pair's local instruction set."""

    a0: int
    b1: int
    b2: int

    def __post_init__(self) -> None:
        for name in ("a0", "b1", "b2"):
            if getattr(self, name) not in (0, 1):
                raise ValueError(f"{name} must be a bit, got {getattr(self, name)!r}")

    @property
    def a1(self) -> int:
        # forced by anti-correlation at equal settings
        return 1 - self.b1

    def alice_bit(self, a: int) -> int:
        return self.a0 if a == 0 else self.a1

    def bob_bit(self, b: int) -> int:
        return self.b1 if b == 1 else self.b2


def class_index(triple: InstructionTriple) -> int:
    """Class label i = 4*(1 - A0) + 2*B1 + B2, in [0, 7]."""
    return 4 * (1 - triple.a0) + 2 * triple.b1 + triple.b2


def triple_of(index: int) -> InstructionTriple:
    """Inverse of class_index."""
    if not 0 <= index <= 7:
        raise ValueError(f"class index must be in [0, 7], got {index}")
    return InstructionTriple(a0=1 - ((index >> 2) & 1), b1=(index >> 1) & 1, b2=index & 1)


def lrm_outcome(index: int, config: AngleConfig) -> Outcome:
    """Outcome of a class-i pair under a settings pair: pure table lookup.

    Alice's bit depends only on (i, a) and Bob's only on (i, b); neither
    side's read-off sees the remote setting.
    """
    t = triple_of(index)
    return Outcome(t.alice_bit(config.a), t.bob_bit(config.b))


def outcome_grid() -> np.ndarray:
    """The full 8x4 outcome table as OUTCOME_LABELS indices.

    Rows are classes i = 0..7, columns follow CONFIG_PAIRS order.
    """
    bell = BellAngles()
    grid = np.empty((8, 4), dtype=np.int64)
    for i in range(8):
        for k, (a, b) in enumerate(CONFIG_PAIRS):
            grid[i, k] = lrm_outcome(i, bell.config(a, b)).index
    return grid


@dataclass(frozen=True)
class ClassWeights:
    """Non-negative class counts N0..N7 (reals allowed, not only integers)."""

    n: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.n) != 8:
            raise ValueError(f"expected 8 class weights, got {len(self.n)}")
        arr = np.asarray(self.n, dtype=float)
        if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
            raise ValueError("class weights must be finite and non-negative")
        if arr.sum() <= 0.0:
            raise ValueError("class weights must not all be zero")

    @property
    def total(self) -> float:
        return float(sum(self.n))

    def fractions(self) -> np.ndarray:
        arr = np.asarray(self.n, dtype=float)
        return arr / arr.sum()

    @classmethod
    def uniform(cls, total: float = 160.0) -> "ClassWeights":
        return cls(tuple([total / 8.0] * 8))

    @classmethod
    def bell_saturating(cls, total: float = 160.0) -> "ClassWeights":
        """Weights that meet the inequality with equality: skip classes 1 and 6.

        The margin identity -(N1 + N6)/2 vanishes for any vector with
        N1 = N6 = 0; this preset puts total/4 on classes 0, 2, 5, 7.
        """
        q = total / 4.0
        return cls((q, 0.0, q, 0.0, 0.0, q, 0.0, q))

    @classmethod
    def from_string(cls, text: str) -> "ClassWeights":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 8:
            raise ValueError(f"expected 8 comma-separated weights, got {len(parts)}")
        return cls(tuple(float(p) for p in parts))


@dataclass
class CounterTable:
    """Outcome counts per settings pair: a 4x4 array, rows CONFIG_PAIRS,
    columns OUTCOME_LABELS.  Counts may be reals (expected tables) or
    integers (sampled tables); merging is component-wise addition."""

    counts: np.ndarray = field(default_factory=lambda: np.zeros((4, 4), dtype=float))

    def __post_init__(self) -> None:
        self.counts = np.asarray(self.counts, dtype=float)
        if self.counts.shape != (4, 4):
            raise ValueError(f"counter array must be 4x4, got {self.counts.shape}")
        if np.any(self.counts < 0.0):
            raise ValueError("counters must be non-negative")

    def increment(self, config: AngleConfig, outcome: Outcome, weight: float = 1.0) -> None:
        self.counts[CONFIG_INDEX[config.key], outcome.index] += weight

    def count(self, a: int, b: int, label: str) -> float:
        return float(self.counts[CONFIG_INDEX[(a, b)], OUTCOME_INDEX[label]])

    def config_total(self, a: int, b: int) -> float:
        return float(self.counts[CONFIG_INDEX[(a, b)]].sum())

    def equal_count(self, a: int, b: int) -> float:
        return self.count(a, b, "00") + self.count(a, b, "11")

    def unequal_count(self, a: int, b: int) -> float:
        return self.count(a, b, "01") + self.count(a, b, "10")

    @property
    def total(self) -> float:
        return float(self.counts.sum())

    def __add__(self, other: "CounterTable") -> "CounterTable":
        return CounterTable(self.counts + other.counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CounterTable):
            return NotImplemented
        return bool(np.array_equal(self.counts, other.counts))


@dataclass(frozen=True)
class BellReport:
    """The inequality N_02(U) <= N_01(U) + N_12(E) evaluated on one table."""

    lhs: float
    rhs: float
    margin: float
    violated: bool
    sigma: Optional[float] = None

    @property
    def significance(self) -> Optional[float]:
        """margin / sigma when a binomial sigma is attached."""
        if self.sigma is None or self.sigma == 0.0:
            return None
        return self.margin / self.sigma


def bell_check(table: CounterTable) -> BellReport:
    """Evaluate the inequality; positive margin means violation."""
    lhs = table.unequal_count(0, 2)
    rhs = table.unequal_count(0, 1) + table.equal_count(1, 2)
    margin = lhs - rhs
    return BellReport(lhs=lhs, rhs=rhs, margin=margin, violated=margin > 0.0)


def expected_counters(weights: ClassWeights, bell: BellAngles | None = None) -> CounterTable:
    """Expected counters when each class spreads evenly over the four configs.

    Exact reals, no rounding: each class i contributes Ni/4 to the one cell
    (config, lrm_outcome(i, config)) per config.
    """
    bell = bell or BellAngles()
    table = CounterTable()
    for i, weight in enumerate(weights.n):
        share = weight / 4.0
        for a, b in CONFIG_PAIRS:
            table.increment(bell.config(a, b), lrm_outcome(i, bell.config(a, b)), share)
    return table


def sample_classes(weights: ClassWeights, rng: np.random.Generator, size: int) -> np.ndarray:
    """Draw class indices with probabilities Ni / N_total."""
    cum = np.cumsum(weights.fractions())
    idx = np.searchsorted(cum, rng.random(size), side="right")
    return np.minimum(idx, 7)


def sample_lrm_run(
    weights: ClassWeights, config: AngleConfig, rng: np.random.Generator
) -> Outcome:
    """One Monte Carlo run: draw a class, look up its preset outcome.

    The class draw never sees the config; callers must draw the config
    independently (the stamping happens at pair creation).
    """
    i = int(sample_classes(weights, rng, 1)[0])
    return lrm_outcome(i, config)


def format_outcome_table() -> str:
    """Human-readable 32-entry outcome table plus the four outcome groups."""
    bell = BellAngles()
    lines = ["class (A0,B1,B2,A1)   " + "  ".join(f"ab={a}{b}" for a, b in CONFIG_PAIRS)]
    groups: dict[str, list[str]] = {label: [] for label in OUTCOME_LABELS}
    for i in range(8):
        t = triple_of(i)
        cells = []
        for a, b in CONFIG_PAIRS:
            out = lrm_outcome(i, bell.config(a, b))
            cells.append(f"({out.label})")
            groups[out.label].append(f"{i}_{a}{b}")
        lines.append(f"i={i}   ({t.a0},{t.b1},{t.b2},{t.a1})      " + "   ".join(cells))
    lines.append("")
    for label in ("10", "00", "11", "01"):
        members = " ".join(groups[label])
        lines.append(f"group ({label}), {len(groups[label])} entries: {members}")
    lines.append("")
    lines.append("margin identity: lhs - rhs = -(N1 + N6)/2 for every weight vector")
    return "\n".join(lines)
