"""Light-cone audit of one run: who could have influenced what, and when.

The run is laid out on a 1+1 dimensional diagram with the source at the
origin and the two analyzers at x = -L and x = +L.  Each measurement
splits the local wave into branches whose fronts spread at light speed;
the branches zip up where the fronts meet.  The audit below checks every
claimed influence against the intervals actually available.
"""

from bellworlds import (
    EventLog,
    SpacetimeEvent,
    branch_front,
    build_schedule,
    causal_audit,
    interval_kind,
)

log = build_schedule(half_length=1.0)
print("event log (kind, t, x):")
print(log.to_text())
print()

# setting choices versus the remote measurement: both strictly spacelike,
# so neither choice can steer the far detector
report = causal_audit(log)
for side, kind in sorted(report.choice_vs_remote_measure.items()):
    print(f"choice on {side}'s side vs remote measurement: {kind}")
print(f"settings reach the creation event: {report.settings_reach_creation}")
print(f"creation sits inside both setting branches at overlap: "
      f"{report.creation_in_branch_of_settings}")
print()

# watch the two measurement branch fronts zip toward each other
alice_m = log.one("MeasureAlice")
bob_m = log.one("MeasureBob")
print("   t    alice front          bob front")
for t in (1.0, 1.25, 1.5, 1.75, 2.0):
    a_lo, a_hi = branch_front(alice_m, t)
    b_lo, b_hi = branch_front(bob_m, t)
    touches = " <- fronts meet at x=0" if a_hi >= 0.0 >= b_lo else ""
    print(f"{t:5.2f}  [{a_lo:+5.2f}, {a_hi:+5.2f}]  [{b_lo:+5.2f}, {b_hi:+5.2f}]{touches}")
print()

# a doctored log: Alice picks her setting before the pair even exists.
# ONLY then does the setting's past reach creation.
early = EventLog(
    events=(
        SpacetimeEvent("Creation", 0.0, 0.0),
        SpacetimeEvent("ChoiceAlice", -2.0, -1.0),
        SpacetimeEvent("ChoiceBob", 0.5, 1.0),
        SpacetimeEvent("MeasureAlice", 1.0, -1.0),
        SpacetimeEvent("MeasureBob", 1.0, 1.0),
        SpacetimeEvent("Overlap", 2.0, 0.0),
    ),
    half_length=1.0,
)
print("with ChoiceAlice moved to t = -2:")
print(f"  choice vs creation interval: "
      f"{interval_kind(early.one('ChoiceAlice'), early.one('Creation'))}")
print(f"  settings reach the creation event: "
      f"{causal_audit(early).settings_reach_creation}")
