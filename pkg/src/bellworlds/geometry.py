"""Planar angle arithmetic and outcome geometry for a two-analyzer pair experiment.

Conventions used throughout the package:

* Angles are plain floats in radians.  The canonical range is [0, 2*pi);
  signed differences live in (-pi, pi].
* Alice's analyzer axis sits at ``alpha``, Bob's at ``beta``.  A shared
  "definite result" angle ``rho`` on the cross-section circle selects one
  outcome wedge per analyzer.  The two analyzers face each other, so their
  wedge orientations have opposite handedness:

  - Alice reads 0 iff ``(rho - alpha) mod pi`` lands in [0, pi/2),
  - Bob reads 0 iff ``(beta - rho) mod pi`` lands in [0, pi/2).

  Both rules share the same half-open boundary convention, which assigns
  each wedge edge exactly once.  The closed-lower-edge choice is ours; it
  keeps anti-correlation at ``alpha == beta`` exact away from the measure
  zero edges and makes the four wedge volumes sum to one.
* Each side's outcome function reads only its own axis and ``rho``; the
  remote setting never appears in the signature.

The closed-form wedge volumes are V(00) = V(11) = |delta|/pi and
V(01) = V(10) = (1 - 2|delta|/pi)/2 for |delta| <= pi/2, where
``delta = beta - alpha``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

TAU = 2.0 * math.pi

# The four legal settings pairs (a, b) and the outcome label order used by
# every counter table in the package.
CONFIG_PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (1, 1), (1, 2))
OUTCOME_LABELS: tuple[str, ...] = ("00", "01", "10", "11")


def normalize(theta: float) -> float:
    """Wrap an angle into the canonical range [0, 2*pi)."""
    wrapped = theta % TAU
    # a tiny negative theta can round (theta % TAU) up to exactly TAU;
    # fold that edge back so the range stays half-open
    return 0.0 if wrapped == TAU else wrapped


def delta(alpha: float, beta: float) -> float:
    """Signed analyzer separation beta - alpha, wrapped into (-pi, pi].

    The wrap subtracts a single 2*pi when needed instead of renormalizing
    both inputs, so exact multiples of pi/8 stay exact in floating point.
    """
    d = (beta - alpha) % TAU
    if d > math.pi:
        d -= TAU
    return d


class Outcome(NamedTuple):
    """One run's pair of detector bits (Alice's, Bob's)."""

    a: int
    b: int

    @property
    def label(self) -> str:
        return f"{self.a}{self.b}"

    @property
    def is_equal(self) -> bool:
        """E class (equal bits) versus U class (unequal bits)."""
        return self.a == self.b

    @property
    def index(self) -> int:
        """Position of this outcome in OUTCOME_LABELS."""
        return 2 * self.a + self.b

    @classmethod
    def from_index(cls, index: int) -> "Outcome":
        return cls((index >> 1) & 1, index & 1)


@dataclass(frozen=True)
class AngleConfig:
    """One settings pair: indices (a, b) and the resolved axes (alpha, beta)."""

    a: int
    b: int
    alpha: float
    beta: float

    @property
    def delta(self) -> float:
        return delta(self.alpha, self.beta)

    @property
    def key(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def label(self) -> str:
        return f"{self.a}{self.b}"


@dataclass(frozen=True)
class BellAngles:
    """The three analyzer settings; defaults maximize the inequality violation."""

    phi0: float = 0.0
    phi1: float = 3.0 * math.pi / 8.0
    phi2: float = math.pi / 8.0

    def angle(self, index: int) -> float:
        return (self.phi0, self.phi1, self.phi2)[index]

    def config(self, a: int, b: int) -> AngleConfig:
        if (a, b) not in CONFIG_PAIRS:
            raise ValueError(f"illegal settings pair ({a}, {b}); legal pairs: {CONFIG_PAIRS}")
        return AngleConfig(a=a, b=b, alpha=self.angle(a), beta=self.angle(b))

    def configs(self) -> tuple[AngleConfig, ...]:
        return tuple(self.config(a, b) for a, b in CONFIG_PAIRS)


def alice_outcome(rho: float, alpha: float) -> int:
    """Alice's bit for world angle rho: 0 iff (rho - alpha) mod pi in [0, pi/2)."""
    return 0 if (rho - alpha) % math.pi < math.pi / 2.0 else 1


def bob_outcome(rho: float, beta: float) -> int:
    """Bob's bit: 0 iff (beta - rho) mod pi in [0, pi/2) (clockwise from b)."""
    return 0 if (beta - rho) % math.pi < math.pi / 2.0 else 1


def classify_world(rho: float, config: AngleConfig) -> Outcome:
    """The outcome pair selected by world angle rho under a settings pair."""
    return Outcome(alice_outcome(rho, config.alpha), bob_outcome(rho, config.beta))


def alice_outcomes(rho: np.ndarray, alpha: float) -> np.ndarray:
    """Vectorized alice_outcome for Monte Carlo engines."""
    return (np.mod(rho - alpha, math.pi) >= math.pi / 2.0).astype(np.int64)


def bob_outcomes(rho: np.ndarray, beta: float) -> np.ndarray:
    """Vectorized bob_outcome."""
    return (np.mod(beta - rho, math.pi) >= math.pi / 2.0).astype(np.int64)


def classify_indices(rho: np.ndarray, config: AngleConfig) -> np.ndarray:
    """Vectorized classify_world, returning positions in OUTCOME_LABELS."""
    return 2 * alice_outcomes(rho, config.alpha) + bob_outcomes(rho, config.beta)


@dataclass(frozen=True)
class VolumeTable:
    """Closed-form wedge volumes V(AB) at a given analyzer separation."""

    v00: float
    v01: float
    v10: float
    v11: float

    @property
    def v_equal(self) -> float:
        return self.v00 + self.v11

    @property
    def v_unequal(self) -> float:
        return self.v01 + self.v10

    def by_label(self) -> dict[str, float]:
        return {"00": self.v00, "01": self.v01, "10": self.v10, "11": self.v11}

    def __iter__(self) -> Iterator[float]:
        return iter((self.v00, self.v01, self.v10, self.v11))


def world_volumes(d: float) -> VolumeTable:
    """Wedge volumes for separation d; defined only on |d| <= pi/2.

    V(E) = 2|d|/pi grows linearly, unlike the quadratic sin^2(d); the two
    laws intersect exactly at d in {0, pi/4, pi/2}.
    """
    if abs(d) > math.pi / 2.0:
        raise ValueError(f"|delta| = {abs(d)} exceeds pi/2; the volume law is not defined there")
    v_same = abs(d) / math.pi
    v_diff = (1.0 - 2.0 * v_same) / 2.0
    return VolumeTable(v00=v_same, v01=v_diff, v10=v_diff, v11=v_same)
