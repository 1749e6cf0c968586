from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from walkcoach.catalog import Exercise, WeeklyGoal
from walkcoach.reports import ReportStatus
from walkcoach.scheduler import (
    DayKind,
    WeekSchedule,
    plan_week,
    reschedule,
    rolling_view,
)

S, R = DayKind.SESSION, DayKind.REST


def goal_with_frequency(f):
    return WeeklyGoal(Exercise.MODERATE, 20, f)


def test_five_sessions_rest_midweek_and_weekend():
    week = plan_week(goal_with_frequency(5), 1)
    assert week.kinds == (S, R, S, S, S, R, S)
    assert week.session_days == (0, 2, 3, 4, 6)


def test_four_sessions_alternate():
    week = plan_week(goal_with_frequency(4), 1)
    assert week.kinds == (S, R, S, R, S, R, S)


def test_three_sessions_land_on_even_gaps():
    week = plan_week(goal_with_frequency(3), 1)
    assert week.kinds == (R, S, R, S, R, S, R)


@pytest.mark.parametrize("f", [3, 4, 5])
def test_session_gaps_stay_uniform(f):
    days = plan_week(goal_with_frequency(f), 1).session_days
    gaps = [b - a for a, b in zip(days, days[1:])]
    assert max(gaps) - min(gaps) <= 1


def test_fresh_week_has_no_statuses():
    week = plan_week(goal_with_frequency(4), 3)
    assert week.statuses == (None,) * 7
    assert week.done_count == 0
    assert week.week_index == 3


def test_with_status_records_one_day():
    week = plan_week(goal_with_frequency(4), 1)
    week = week.with_status(0, ReportStatus.DONE)
    assert week.done_count == 1
    assert week.statuses[0] is ReportStatus.DONE
    assert week.statuses[1] is None


def test_reschedule_packs_missed_sessions_into_the_remainder():
    week = plan_week(goal_with_frequency(5), 1)
    week = week.with_status(0, ReportStatus.DONE)
    week = week.with_status(2, ReportStatus.NOPE)
    moved = reschedule(week, 2)
    # days 0..2 untouched; four sessions still owed over days 3..6
    assert moved.kinds[:3] == week.kinds[:3]
    assert moved.kinds[3:] == (S, S, S, S)


def test_reschedule_spreads_when_there_is_slack():
    week = plan_week(goal_with_frequency(3), 1)
    week = week.with_status(1, ReportStatus.NOPE)
    moved = reschedule(week, 1)
    assert moved.kinds[:2] == (R, S)
    assert sum(1 for k in moved.kinds[2:] if k is S) == 3
    assert moved.statuses == week.statuses


def test_reschedule_is_a_noop_once_the_quota_is_met():
    week = plan_week(goal_with_frequency(3), 1)
    for day in week.session_days:
        week = week.with_status(day, ReportStatus.DONE)
    assert reschedule(week, 5) is week


def test_reschedule_validates_today():
    week = plan_week(goal_with_frequency(3), 1)
    with pytest.raises(ValueError):
        reschedule(week, 7)


@given(
    f=st.sampled_from([3, 4, 5]),
    today=st.integers(min_value=0, max_value=6),
    seed=st.integers(min_value=0, max_value=2**20),
)
def test_reschedule_never_rewrites_the_past(f, today, seed):
    rng = random.Random(seed)
    week = plan_week(goal_with_frequency(f), 1)
    for day in range(today + 1):
        if week.kinds[day] is S and rng.random() < 0.8:
            status = rng.choice([ReportStatus.DONE, ReportStatus.NOPE, ReportStatus.ALMOST])
            week = week.with_status(day, status)
    moved = reschedule(week, today)
    assert moved.kinds[: today + 1] == week.kinds[: today + 1]
    assert moved.statuses == week.statuses
    needed = f - week.done_count
    future_sessions = sum(1 for k in moved.kinds[today + 1 :] if k is S)
    assert future_sessions == max(0, min(needed, 6 - today)) or needed <= 0


def test_rolling_view_is_a_seven_day_window_starting_today():
    current = plan_week(goal_with_frequency(4), 2)
    following = plan_week(goal_with_frequency(3), 3)
    view = rolling_view(current, following, today_index=3)
    assert len(view) == 7
    assert [(d.week_index, d.day_index) for d in view[:4]] == [(2, 3), (2, 4), (2, 5), (2, 6)]
    assert [(d.week_index, d.day_index) for d in view[4:]] == [(3, 0), (3, 1), (3, 2)]
    assert view[0].kind is current.kinds[3]


def test_rolling_view_requires_consecutive_weeks():
    with pytest.raises(ValueError):
        rolling_view(plan_week(goal_with_frequency(3), 1), plan_week(goal_with_frequency(3), 3), 0)
