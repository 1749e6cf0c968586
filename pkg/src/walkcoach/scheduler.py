"""Day-level scheduling: spread sessions over the week, repair after misses.

A week is seven day slots (0..6).  Sessions are spread so rest days fall at
the midpoints of equal arcs — the same spacing rule lays out a fresh week and
redistributes what's left of one after a missed session.  Past days are
history: rescheduling only ever rewrites days strictly after the report that
triggered it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .catalog import WeeklyGoal
from .reports import ReportStatus

DAYS_PER_WEEK = 7


class DayKind(str, Enum):
    SESSION = "session"
    REST = "rest"


def _rest_positions(length: int, rest_count: int) -> set[int]:
    # Midpoint rule: k-th rest sits at floor((2k+1) * length / (2 * rest_count)),
    # centering rests in equal arcs so session gaps differ by at most one day.
    return {(2 * k + 1) * length // (2 * rest_count) for k in range(rest_count)}


@dataclass(frozen=True)
class WeekSchedule:
    """One week's day layout plus whatever has been reported against it."""

    week_index: int
    goal: WeeklyGoal
    kinds: tuple[DayKind, ...]
    statuses: tuple[ReportStatus | None, ...]

    def __post_init__(self) -> None:
        if self.week_index < 1:
            raise ValueError(f"week_index must be >= 1, got {self.week_index}")
        if len(self.kinds) != DAYS_PER_WEEK or len(self.statuses) != DAYS_PER_WEEK:
            raise ValueError("a week has exactly 7 day slots")

    @property
    def session_days(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.kinds) if k is DayKind.SESSION)

    @property
    def done_count(self) -> int:
        return sum(1 for s in self.statuses if s is ReportStatus.DONE)

    def with_status(self, day_index: int, status: ReportStatus) -> WeekSchedule:
        statuses = list(self.statuses)
        statuses[day_index] = status
        return replace(self, statuses=tuple(statuses))


def plan_week(goal: WeeklyGoal, week_index: int) -> WeekSchedule:
    """Lay out a fresh week for a goal: sessions spread, rests at arc midpoints."""
    rests = _rest_positions(DAYS_PER_WEEK, DAYS_PER_WEEK - goal.frequency)
    kinds = tuple(
        DayKind.REST if day in rests else DayKind.SESSION
        for day in range(DAYS_PER_WEEK)
    )
    return WeekSchedule(
        week_index=week_index,
        goal=goal,
        kinds=kinds,
        statuses=(None,) * DAYS_PER_WEEK,
    )


def reschedule(schedule: WeekSchedule, today_index: int) -> WeekSchedule:
    """Redistribute the still-needed sessions over the days after ``today_index``.

    Call after recording a missed session.  Days up to and including today
    keep their kind and status untouched.  If the remaining days can't cover
    what's still needed, every one of them becomes a session; otherwise the
    needed sessions spread over the remainder by the same midpoint rule used
    for a fresh week.
    """
    if not 0 <= today_index < DAYS_PER_WEEK:
        raise ValueError(f"today_index must be 0..6, got {today_index}")
    needed = schedule.goal.frequency - schedule.done_count
    if needed <= 0:
        return schedule
    length = DAYS_PER_WEEK - 1 - today_index  # days strictly after today
    if needed >= length:
        future = (DayKind.SESSION,) * length
    else:
        rests = _rest_positions(length, length - needed)
        future = tuple(
            DayKind.REST if j in rests else DayKind.SESSION for j in range(length)
        )
    kinds = schedule.kinds[: today_index + 1] + future
    return replace(schedule, kinds=kinds)


@dataclass(frozen=True)
class DayView:
    """One slot of the rolling window: a calendar day with its plan and report."""

    week_index: int
    day_index: int
    kind: DayKind
    status: ReportStatus | None


def rolling_view(
    current: WeekSchedule, following: WeekSchedule, today_index: int
) -> tuple[DayView, ...]:
    """Seven contiguous days starting today: tail of this week, head of the next."""
    if following.week_index != current.week_index + 1:
        raise ValueError(
            f"expected week {current.week_index + 1} to follow, got {following.week_index}"
        )
    if not 0 <= today_index < DAYS_PER_WEEK:
        raise ValueError(f"today_index must be 0..6, got {today_index}")
    view = [
        DayView(current.week_index, day, current.kinds[day], current.statuses[day])
        for day in range(today_index, DAYS_PER_WEEK)
    ]
    view += [
        DayView(following.week_index, day, following.kinds[day], following.statuses[day])
        for day in range(today_index)
    ]
    return tuple(view)
