"""1+1D causal bookkeeping for the two-photon experiment.

Natural units, c = 1.  The source sits at x = 0 and fires at t = 0;
Alice's station is at -L and Bob's at +L, so the photons ride the
lightlike worldlines |x| = t until measurement at t = L.  Basis choices
happen mid-flight, and each measurement launches a decoherence front (a
"zipper") that spreads at speed <= 1 and closes at (2L, 0) where the two
records first overlap.

The audit answers the causal questions the statistics lean on: whether
each choice is spacelike-separated from the remote measurement, whether
any choice's future cone reaches back to the creation event (it cannot
for any choice made after t = 0, which is what licenses treating the
source's hidden state as setting-independent), and whether the choices'
fronts have reached the source's location by the time the records meet.
"""

from __future__ import annotations

from dataclasses import dataclass, field

EVENT_KINDS = (
    "Creation",
    "ChoiceAlice",
    "ChoiceBob",
    "MeasureAlice",
    "MeasureBob",
    "Overlap",
)

INTERVAL_KINDS = ("timelike", "lightlike", "spacelike")


@dataclass(frozen=True)
class SpacetimeEvent:
    kind: str
    t: float
    x: float

    def __post_init__(self) -> None:
        if self.kind not in EVENT_KINDS:
            raise ValueError(f"unknown event kind {self.kind!r}")


def interval_kind(e1: SpacetimeEvent, e2: SpacetimeEvent) -> str:
    """Classify the separation by the sign of (dt)^2 - (dx)^2."""
    dt = e2.t - e1.t
    dx = e2.x - e1.x
    s2 = dt * dt - dx * dx
    if s2 > 0.0:
        return "timelike"
    if s2 < 0.0:
        return "spacelike"
    return "lightlike"


def branch_front(origin: SpacetimeEvent, t: float, speed: float = 1.0) -> tuple[float, float]:
    """Spatial interval the branching front from origin has reached at t."""
    if t < origin.t:
        raise ValueError(f"front queried at t={t} before its origin at t={origin.t}")
    if not 0.0 < speed <= 1.0:
        raise ValueError(f"front speed must lie in (0, 1], got {speed}")
    reach = (t - origin.t) * speed
    return (origin.x - reach, origin.x + reach)


@dataclass(frozen=True)
class EventLog:
    """Time-ordered event record for one run of the experiment.

    Construction enforces the geometry (one Creation at the origin, one
    measurement per station at (L, -L) and (L, +L)) but deliberately not
    the choice timing: logs with anomalous choices are representable so
    the audit can flag them instead of refusing to look.
    """

    events: tuple[SpacetimeEvent, ...]
    half_length: float

    def __post_init__(self) -> None:
        events = tuple(sorted(self.events, key=lambda e: (e.t, e.x)))
        object.__setattr__(self, "events", events)
        if self.half_length <= 0.0:
            raise ValueError("half_length must be positive")
        creations = self.of_kind("Creation")
        if len(creations) != 1 or creations[0].t != 0.0 or creations[0].x != 0.0:
            raise ValueError("log must contain exactly one Creation at (t=0, x=0)")
        L = self.half_length
        for kind, x in (("MeasureAlice", -L), ("MeasureBob", +L)):
            found = self.of_kind(kind)
            if len(found) != 1 or found[0].t != L or found[0].x != x:
                raise ValueError(f"log must contain exactly one {kind} at (t={L}, x={x})")

    def of_kind(self, kind: str) -> tuple[SpacetimeEvent, ...]:
        return tuple(e for e in self.events if e.kind == kind)

    def one(self, kind: str) -> SpacetimeEvent:
        found = self.of_kind(kind)
        if len(found) != 1:
            raise ValueError(f"expected exactly one {kind} event, found {len(found)}")
        return found[0]

    def to_text(self) -> str:
        """One event per line: `kind t x` (repr floats, round-trip safe)."""
        return "\n".join(f"{e.kind} {e.t!r} {e.x!r}" for e in self.events) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "EventLog":
        events = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected `kind t x`, got {line!r}")
            kind, t_str, x_str = parts
            events.append(SpacetimeEvent(kind=kind, t=float(t_str), x=float(x_str)))
        bobs = [e for e in events if e.kind == "MeasureBob"]
        if len(bobs) != 1:
            raise ValueError("log text must contain exactly one MeasureBob to fix the geometry")
        return cls(events=tuple(events), half_length=bobs[0].x)


def build_schedule(half_length: float = 1.0, t_choice: float | None = None) -> EventLog:
    """The canonical run: creation, mid-flight choices, measurements, overlap.

    t_choice defaults to half the flight time.  The overlap event sits at
    (2L, 0), where unit-speed fronts from the two measurements meet.
    """
    L = half_length
    if L <= 0.0:
        raise ValueError("half_length must be positive")
    if t_choice is None:
        t_choice = L / 2.0
    if not 0.0 < t_choice < L:
        raise ValueError(f"t_choice must lie in (0, {L}), got {t_choice}")
    events = (
        SpacetimeEvent("Creation", 0.0, 0.0),
        SpacetimeEvent("ChoiceAlice", t_choice, -L),
        SpacetimeEvent("ChoiceBob", t_choice, +L),
        SpacetimeEvent("MeasureAlice", L, -L),
        SpacetimeEvent("MeasureBob", L, +L),
        SpacetimeEvent("Overlap", 2.0 * L, 0.0),
    )
    return EventLog(events=events, half_length=L)


@dataclass(frozen=True)
class CausalReport:
    """What the event geometry permits, per the audit."""

    choice_vs_remote_measure: dict[str, str] = field(default_factory=dict)
    settings_reach_creation: bool = False
    creation_in_branch_of_settings: bool = False


def _future_cone_contains(e: SpacetimeEvent, target: SpacetimeEvent) -> bool:
    dt = target.t - e.t
    return dt >= 0.0 and abs(target.x - e.x) <= dt


def causal_audit(log: EventLog) -> CausalReport:
    """Check the three causal conditions the statistics rely on.

    choice_vs_remote_measure: interval kind between each side's choice
    and the other side's measurement; the no-signalling reading of the
    counters needs both spacelike.  settings_reach_creation: true when a
    choice's future cone contains the creation event, in which case the
    source state may legally depend on the settings and the instruction
    argument loses its premise.  creation_in_branch_of_settings: true
    when both choices' branch fronts cover x = 0 by the overlap time,
    relevant when a second pair is fired from the same source afterwards.
    """
    creation = log.one("Creation")
    overlap = log.one("Overlap")
    choice_a = log.one("ChoiceAlice")
    choice_b = log.one("ChoiceBob")
    measure_a = log.one("MeasureAlice")
    measure_b = log.one("MeasureBob")

    kinds = {
        "alice": interval_kind(choice_a, measure_b),
        "bob": interval_kind(choice_b, measure_a),
    }
    reach = any(
        _future_cone_contains(choice, creation) for choice in (choice_a, choice_b)
    )
    covered = all(
        lo <= creation.x <= hi
        for lo, hi in (
            branch_front(choice_a, overlap.t),
            branch_front(choice_b, overlap.t),
        )
    )
    return CausalReport(
        choice_vs_remote_measure=kinds,
        settings_reach_creation=reach,
        creation_in_branch_of_settings=covered,
    )
