from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from walkcoach.staircase import Staircase


models = st.builds(
    Staircase,
    start=st.floats(min_value=0.0, max_value=700.0),
    ceiling=st.floats(min_value=700.0, max_value=1500.0),
    span=st.integers(min_value=1, max_value=30),
    offset=st.integers(min_value=0, max_value=10),
)


def test_construction_validation():
    with pytest.raises(ValueError):
        Staircase(start=-1.0, ceiling=750.0, span=8, offset=0)
    with pytest.raises(ValueError):
        Staircase(start=800.0, ceiling=750.0, span=8, offset=0)
    with pytest.raises(ValueError):
        Staircase(start=0.0, ceiling=750.0, span=0, offset=0)
    with pytest.raises(ValueError):
        Staircase(start=0.0, ceiling=750.0, span=8, offset=-1)


def test_step_height_divides_the_climb():
    m = Staircase(start=0.0, ceiling=750.0, span=8, offset=0)
    assert m.step_height == 93.75


def test_capability_climbs_then_plateaus():
    m = Staircase(start=0.0, ceiling=750.0, span=8, offset=0)
    assert m.capability_at(1) == 93.75
    assert m.capability_at(4) == 375.0
    assert m.capability_at(8) == 750.0
    assert m.capability_at(9) == 750.0   # past the span: pinned to the ceiling
    assert m.capability_at(100) == 750.0


def test_offset_delays_the_climb():
    m = Staircase(start=0.0, ceiling=750.0, span=8, offset=2)
    assert m.capability_at(1) == 0.0
    assert m.capability_at(2) == 0.0
    assert m.capability_at(3) == 93.75


def test_capability_rejects_weeks_before_one():
    m = Staircase(start=0.0, ceiling=750.0, span=8, offset=0)
    with pytest.raises(ValueError):
        m.capability_at(0)


def test_flat_staircase_holds_its_level():
    m = Staircase(start=750.0, ceiling=750.0, span=1, offset=0)
    for week in (1, 2, 17):
        assert m.capability_at(week) == 750.0


def test_change_step_resizes_span():
    m = Staircase(start=0.0, ceiling=750.0, span=8, offset=3)
    assert m.change_step(+1) == Staircase(start=0.0, ceiling=750.0, span=9, offset=3)
    assert m.change_step(-1) == Staircase(start=0.0, ceiling=750.0, span=7, offset=3)
    with pytest.raises(ValueError):
        Staircase(start=0.0, ceiling=750.0, span=1, offset=0).change_step(-1)


def test_shift_pushes_the_schedule_back():
    m = Staircase(start=0.0, ceiling=750.0, span=8, offset=1)
    assert m.shift(2).offset == 3
    with pytest.raises(ValueError):
        m.shift(-1)


@given(models, st.integers(min_value=1, max_value=60))
def test_capability_monotone_and_bounded(m, week):
    here, there = m.capability_at(week), m.capability_at(week + 1)
    assert here <= there
    assert m.start <= here <= m.ceiling


@given(models, st.integers(min_value=1, max_value=40), st.integers(min_value=0, max_value=10))
def test_shift_is_exact_time_translation(m, week, delta):
    assert m.shift(delta).capability_at(week + delta) == m.capability_at(week)


@given(models, st.integers(min_value=1, max_value=40))
def test_widening_the_span_never_raises_capability(m, week):
    assert m.change_step(+1).capability_at(week) <= m.capability_at(week)
