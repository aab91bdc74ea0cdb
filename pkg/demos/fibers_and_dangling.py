"""Fiber bundles, dangling weight, and the rebranching step that removes it.

Each analyzer grows a bundle of outcome fibers around its own axis, with a
number density f(tau) measured from the nearest wedge boundary.  Pairing
the two bundles fiber-by-fiber only works when the densities line up; the
weight that finds no partner is left dangling.  Rebranching the joint
ensemble on one shared lattice makes the bookkeeping exact again.
"""

import math

from bellworlds import (
    BellAngles,
    DensityFn,
    density_rebranch,
    dr_degeneracy,
    grow_fibers,
    match_fibers,
)

Z_TOTAL = 400.0
DELTA = math.pi / 8

# --- 1. constant density: every fiber finds a partner at any separation ---
flat = DensityFn.constant(Z_TOTAL)
for d in (0.0, DELTA):
    alice = grow_fibers(flat, "alice", 0.0)
    bob = grow_fibers(flat, "bob", d)
    res = match_fibers(alice, bob)
    print(f"constant f, delta = {d / math.pi:.3f} pi: "
          f"matched {res.matched_total:7.2f}, dangling {res.dangling:7.2f}")

# --- 2. sloped density: rotating Bob's bundle misaligns the weights ------
sloped = DensityFn.from_table([0.0, math.pi / 2], [1.0, 3.0], Z_TOTAL)
alice = grow_fibers(sloped, "alice", 0.0)
bob = grow_fibers(sloped, "bob", DELTA)
res = match_fibers(alice, bob)
print(f"sloped   f, delta = {DELTA / math.pi:.3f} pi: "
      f"matched {res.matched_total:7.2f}, dangling {res.dangling:7.2f}")
print()

# --- 3. rebranching: the joint ensemble on Alice's lattice never dangles -
ensemble = density_rebranch(alice, bob, Z_TOTAL)
p_equal = (ensemble.equal_count / ensemble.total)
print(f"rebranched ensemble: {ensemble.total:.0f} branches, "
      f"unmatched weight {ensemble.unmatched_weight}, P(E) = {p_equal:.4f}")
print("(a product of densities follows the volume law, not sin^2)")
print()

# --- 4. degeneracy: many rebranched descendants per definite result ------
config = BellAngles().config(0, 2)
report = dr_degeneracy(0.3, config, sloped, 10**6)
print(f"one ancestor at rho = 0.3 rebranches into ~{report.preimage_count:.0f}")
print(f"descendants, all carrying the same outcome label "
      f"{report.label!r}: {report.labels_identical}")
