"""Four toy world models of an entangled-pair experiment, plus the plumbing
to race them against the Bell inequality.

The package provides: angle and outcome geometry (geometry), the
instruction-set local model (lrm), the shared-world-angle model with its
fiber refinement (sausage), quantum rebranching and its diagnostics
(branching), 1+1D causal auditing (lightcone), and the experiment harness
with reports, sweeps and a CLI (harness, cli).
"""

from .branching import (
    BranchEnsemble,
    branch_probabilities,
    density_overlap,
    density_rebranch,
    dr_degeneracy,
    fiber_requirement,
    quadrant_rebranch,
)
from .geometry import (
    CONFIG_PAIRS,
    OUTCOME_LABELS,
    AngleConfig,
    BellAngles,
    Outcome,
    VolumeTable,
    classify_world,
    delta,
    normalize,
    world_volumes,
)
from .harness import (
    MODELS,
    Schedule,
    SweepCurve,
    SweepPoint,
    bell_statistic,
    born_sample,
    emit_plot,
    emit_report,
    parse_counter_report,
    parse_sweep_report,
    run_experiment,
    shard_counters,
    substream,
    sweep,
)
from .lightcone import (
    CausalReport,
    EventLog,
    SpacetimeEvent,
    branch_front,
    build_schedule,
    causal_audit,
    interval_kind,
)
from .lrm import (
    BellReport,
    ClassWeights,
    CounterTable,
    InstructionTriple,
    bell_check,
    class_index,
    expected_counters,
    format_outcome_table,
    lrm_outcome,
    outcome_grid,
    triple_of,
)
from .sausage import (
    DensityFn,
    DRVector,
    FiberSet,
    MatchResult,
    grow_fibers,
    match_fibers,
    sample_dr,
    sausage_run,
    volume_counters,
)

__version__ = "0.1.0"

__all__ = [
    "AngleConfig",
    "BellAngles",
    "BellReport",
    "BranchEnsemble",
    "CausalReport",
    "ClassWeights",
    "CONFIG_PAIRS",
    "CounterTable",
    "DensityFn",
    "DRVector",
    "EventLog",
    "FiberSet",
    "InstructionTriple",
    "MatchResult",
    "MODELS",
    "Outcome",
    "OUTCOME_LABELS",
    "Schedule",
    "SpacetimeEvent",
    "SweepCurve",
    "SweepPoint",
    "VolumeTable",
    "bell_check",
    "bell_statistic",
    "born_sample",
    "branch_front",
    "branch_probabilities",
    "build_schedule",
    "causal_audit",
    "class_index",
    "classify_world",
    "delta",
    "density_overlap",
    "density_rebranch",
    "dr_degeneracy",
    "emit_plot",
    "emit_report",
    "expected_counters",
    "fiber_requirement",
    "format_outcome_table",
    "grow_fibers",
    "interval_kind",
    "lrm_outcome",
    "match_fibers",
    "normalize",
    "outcome_grid",
    "parse_counter_report",
    "parse_sweep_report",
    "quadrant_rebranch",
    "run_experiment",
    "sample_dr",
    "sausage_run",
    "shard_counters",
    "substream",
    "sweep",
    "triple_of",
    "volume_counters",
    "world_volumes",
]
