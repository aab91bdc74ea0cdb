"""Angle arithmetic, outcome classification, and the wedge volume law."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bellworlds.geometry import (
    CONFIG_PAIRS,
    OUTCOME_LABELS,
    TAU,
    BellAngles,
    Outcome,
    alice_outcome,
    alice_outcomes,
    bob_outcome,
    bob_outcomes,
    classify_indices,
    classify_world,
    delta,
    normalize,
    world_volumes,
)

angles = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)


@given(angles)
def test_normalize_range(theta):
    assert 0.0 <= normalize(theta) < TAU


@given(angles, angles)
def test_delta_signed_range(alpha, beta):
    d = delta(alpha, beta)
    assert -math.pi < d <= math.pi


def test_delta_exact_at_bell_separations():
    phi0, phi1, phi2 = 0.0, 3 * math.pi / 8, math.pi / 8
    assert delta(phi0, phi1) == 3 * math.pi / 8
    assert delta(phi0, phi2) == math.pi / 8
    assert delta(phi1, phi1) == 0.0
    assert delta(phi1, phi2) == -math.pi / 4


def test_outcome_round_trip():
    for index, label in enumerate(OUTCOME_LABELS):
        o = Outcome.from_index(index)
        assert o.index == index
        assert o.label == label
        assert o.is_equal == (label in ("00", "11"))


def test_bell_angles_configs():
    bell = BellAngles()
    configs = bell.configs()
    assert tuple(c.key for c in configs) == CONFIG_PAIRS
    assert [c.delta for c in configs] == [3 * math.pi / 8, math.pi / 8, 0.0, -math.pi / 4]
    with pytest.raises(ValueError):
        bell.config(2, 0)


def test_outcome_tie_rule():
    # wedge edges belong to the lower wedge: rho on the axis reads 0,
    # rho a quarter turn later reads 1, on both sides
    assert alice_outcome(0.0, 0.0) == 0
    assert alice_outcome(math.pi / 2, 0.0) == 1
    assert bob_outcome(0.0, 0.0) == 0
    assert bob_outcome(math.pi / 2, 0.0) == 1


@given(angles, angles)
def test_vectorized_outcomes_match_scalar(rho, axis):
    assert alice_outcomes(np.array([rho]), axis)[0] == alice_outcome(rho, axis)
    assert bob_outcomes(np.array([rho]), axis)[0] == bob_outcome(rho, axis)


def test_classify_matches_components():
    bell = BellAngles()
    rng = np.random.default_rng(0)
    rho = rng.random(500) * TAU
    for config in bell.configs():
        idx = classify_indices(rho, config)
        for r, k in zip(rho, idx):
            assert classify_world(float(r), config).index == k


def test_anti_correlation_at_equal_axes():
    # alpha == beta forces opposite bits away from the wedge edges
    rng = np.random.default_rng(1)
    rho = rng.random(2000) * TAU
    for axis in (0.0, 0.4, 3 * math.pi / 8):
        a = alice_outcomes(rho, axis)
        b = bob_outcomes(rho, axis)
        assert np.all(a == 1 - b)


@given(st.floats(min_value=-math.pi / 2, max_value=math.pi / 2, allow_nan=False))
def test_world_volumes_normalized(d):
    v = world_volumes(d)
    assert v.v00 == v.v11
    assert v.v01 == v.v10
    assert math.isclose(sum(v), 1.0, rel_tol=0, abs_tol=1e-12)
    assert all(x >= 0.0 for x in v)


def test_world_volumes_values():
    v = world_volumes(math.pi / 8)
    assert v.v_equal == 0.25
    assert v.v_unequal == 0.75
    assert v.by_label() == {"00": 0.125, "01": 0.375, "10": 0.375, "11": 0.125}
    assert world_volumes(-math.pi / 4).v_equal == 0.5


def test_world_volumes_domain():
    with pytest.raises(ValueError):
        world_volumes(math.pi / 2 + 1e-6)


def test_volume_law_meets_born_law_at_quarter_multiples():
    # exact intersections of 2|d|/pi and sin^2 d
    for d, expected in ((0.0, 0.0), (math.pi / 4, 0.5), (math.pi / 2, 1.0)):
        v_equal = world_volumes(d).v_equal
        assert v_equal == expected
        assert abs(v_equal - math.sin(d) ** 2) <= math.ulp(max(expected, 0.5))
