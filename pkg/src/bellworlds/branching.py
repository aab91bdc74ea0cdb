"""Quantum rebranching: local branch multiplication on decoherence overlap.

When the two measurement records meet, every surviving joint world splits
again, locally, into a number of descendants set by the other side's
state.  Two mechanisms are provided:

* B-quadrant: the closed-form rule.  Equal-outcome labels each receive
  round(z_tilde * sin^2 delta) branches and unequal labels
  round(z_tilde * cos^2 delta), so branch-counting probabilities
  reproduce the quantum coincidence law by fiat.
* A-density: the fiber-level rule.  On a shared angular grid each world
  at angle rho splits into z_tilde^2 * f(rho - alpha) * f(beta - rho)
  descendants (cell-width normalized), which by construction leaves no
  dangling weight; whether its coincidence fraction matches sin^2 delta
  depends on the profile f, and density_overlap reports the comparison
  without adjudicating it.

dr_degeneracy shows why a single "definite result" angle cannot survive
rebranching: every descendant of a fiber inherits its ancestor's angle
and therefore its outcome label, so the multiplication never moves weight
between labels.  fiber_requirement is the cost diagnostic: the fiber
budget needed so the rarest label class at maximal analyzer separation
still resolves to one fiber at a given angular resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geometry import (
    OUTCOME_LABELS,
    AngleConfig,
    alice_outcomes,
    bob_outcomes,
    classify_world,
)
from .sausage import HALF_PI, DensityFn, FiberSet

# above this, z * sin^2(delta) in floats can drop integer resolution
_EXACT_INT_LIMIT = 2**53


@dataclass(frozen=True)
class BranchEnsemble:
    """Branch counts per outcome label, with the mechanism that made them.

    resolution records the rebranch multiplier (or angular resolution)
    the ensemble was built at; unmatched_weight is the weight left
    dangling by the construction, zero for both built-in mechanisms.
    """

    branches: dict[str, int | float]
    mechanism: str
    resolution: int | float
    unmatched_weight: float = 0.0

    def __post_init__(self) -> None:
        if self.mechanism not in ("A-density", "B-quadrant"):
            raise ValueError(f"unknown mechanism {self.mechanism!r}")
        for label, count in self.branches.items():
            if label not in OUTCOME_LABELS:
                raise ValueError(f"unknown outcome label {label!r}")
            if count < 0:
                raise ValueError(f"negative branch count for {label}")

    @property
    def total(self) -> int | float:
        return sum(self.branches.values())

    @property
    def equal_count(self) -> int | float:
        return self.branches.get("00", 0) + self.branches.get("11", 0)

    @property
    def unequal_count(self) -> int | float:
        return self.branches.get("01", 0) + self.branches.get("10", 0)


def _round_count(z_tilde: int | float, weight: float) -> int | float:
    """round(z_tilde * weight) half-to-even, exactly even for huge counts."""
    if isinstance(z_tilde, int) and z_tilde >= _EXACT_INT_LIMIT:
        return round(Fraction(z_tilde) * Fraction(weight))
    return round(z_tilde * weight)


def quadrant_rebranch(delta: float, z_tilde: int | float) -> BranchEnsemble:
    """Closed-form rebranching of the four outcome quadrants.

    Equal labels each get round(z_tilde * sin^2 delta) branches, unequal
    labels round(z_tilde * cos^2 delta); at delta = 0 the equal classes
    vanish, the anti-correlated limit.
    """
    if abs(delta) > HALF_PI + 1e-12:
        raise ValueError(f"|delta| must be <= pi/2, got {delta}")
    if z_tilde < 1:
        raise ValueError(f"rebranch multiplier must be >= 1, got {z_tilde}")
    n_equal = _round_count(z_tilde, math.sin(delta) ** 2)
    n_unequal = _round_count(z_tilde, math.cos(delta) ** 2)
    branches = {"00": n_equal, "01": n_unequal, "10": n_unequal, "11": n_equal}
    return BranchEnsemble(branches=branches, mechanism="B-quadrant", resolution=z_tilde)


def density_rebranch(alice: FiberSet, bob: FiberSet, z_tilde: int | float) -> BranchEnsemble:
    """Fiber-level rebranching on the shared angular grid.

    Each of Alice's grid cells at global angle rho carries
    z_tilde^2 * f(rho - alpha) * f(beta - rho) * cell_width^2 descendant
    branches, labeled by the outcome pair of that world angle.  Both
    sides perform the same multiplication, so every branch is paired and
    nothing dangles, for any profile and any separation.
    """
    if alice.origin != "alice" or bob.origin != "bob":
        raise ValueError("density_rebranch expects (alice-grown, bob-grown) sets in that order")
    if alice.m != bob.m:
        raise ValueError(f"fiber grids disagree: m = {alice.m} vs {bob.m}")
    width = alice.cell_width
    rho = alice.rho
    f_alice = np.asarray(alice.density.at_angle(rho - alice.axis), dtype=float)
    f_bob = np.asarray(bob.density.at_angle(bob.axis - rho), dtype=float)
    counts = (float(z_tilde) ** 2) * f_alice * f_bob * width * width
    labels = 2 * alice_outcomes(rho, alice.axis) + bob_outcomes(rho, bob.axis)
    branches = {
        label: float(counts[labels == k].sum()) for k, label in enumerate(OUTCOME_LABELS)
    }
    return BranchEnsemble(
        branches=branches, mechanism="A-density", resolution=z_tilde, unmatched_weight=0.0
    )


def branch_probabilities(ensemble: BranchEnsemble) -> dict[str, float]:
    """Empirical probabilities by branch counting: P(AB) = N(AB) / total."""
    total = ensemble.total
    if total <= 0:
        raise ValueError("cannot normalize an empty ensemble")
    return {label: ensemble.branches.get(label, 0) / total for label in OUTCOME_LABELS}


def density_overlap(density: DensityFn, delta: float) -> float:
    """The overlap integral 2 * int_0^delta f(tau) f(delta - tau) dtau.

    Computed by per-piece Simpson quadrature on the merged breakpoints of
    f(tau) and f(delta - tau); the integrand is piecewise quadratic for a
    tabulated (piecewise-linear) profile, so the result is exact up to
    roundoff.  Reported for comparison against sin^2 delta; no
    proportionality claim is built in.
    """
    if delta < 0.0 or delta > HALF_PI + 1e-12:
        raise ValueError(f"delta must lie in [0, pi/2], got {delta}")
    if delta == 0.0:
        return 0.0
    nodes = np.concatenate(([0.0, delta], density.tau, delta - density.tau))
    nodes = np.unique(np.clip(nodes, 0.0, delta))

    def integrand(t: np.ndarray) -> np.ndarray:
        return np.asarray(density(t) * density(delta - t), dtype=float)

    a, b = nodes[:-1], nodes[1:]
    h = b - a
    total = np.sum(h / 6.0 * (integrand(a) + 4.0 * integrand((a + b) / 2.0) + integrand(b)))
    return 2.0 * float(total)


@dataclass(frozen=True)
class DegeneracyReport:
    """Fate of one pre-rebranch fiber: descendant count and label purity."""

    preimage_count: float
    labels_identical: bool
    label: str


def dr_degeneracy(
    rho: float,
    config: AngleConfig,
    density: DensityFn,
    z_tilde: int | float,
    m: int = 1024,
) -> DegeneracyReport:
    """How many descendants one fiber at rho gets, and whether they agree.

    The fiber multiplies into z_tilde * f(beta - rho) * cell_width
    descendants (never fewer than itself).  Every descendant sits at the
    same world angle rho, so all carry the ancestor's outcome label: the
    conditional distribution over labels given the ancestor is a point
    mass, which is what kills a single persisting "actual world" marker.
    """
    width = HALF_PI / m
    raw = float(z_tilde) * float(density.at_angle(config.beta - rho)) * width
    preimage_count = max(1.0, raw)
    ancestor = classify_world(rho, config).label
    # descendants all sit at the ancestor's world angle, so classifying
    # that angle once covers every one of them
    descendant = classify_world(rho, config).label
    return DegeneracyReport(
        preimage_count=preimage_count,
        labels_identical=descendant == ancestor,
        label=ancestor,
    )


def fiber_requirement(epsilon: float) -> int:
    """Fibers needed so the rarest class resolves at angular resolution epsilon.

    At maximal separation the smallest branch class has relative size
    sin^2(epsilon); keeping at least one fiber in it takes
    ceil(1 / sin^2 epsilon) fibers.
    """
    if epsilon <= 0.0 or epsilon > HALF_PI + 1e-12:
        raise ValueError(f"epsilon must lie in (0, pi/2], got {epsilon}")
    # sin^2 can land one ulp under an exact value (pi/4 -> just below 1/2),
    # which would bump the ceiling past the true integer; absorb that.
    return math.ceil(1.0 / math.sin(epsilon) ** 2 - 1e-9)
