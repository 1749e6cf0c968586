"""Walking-exercise catalog and the weekly goal space.

A weekly goal is one walking style done for a fixed number of minutes a fixed
number of days per week.  Effort is measured in MET-minutes per week
(metabolic cost x minutes x sessions), which is the single currency the rest
of the coach trades in:

- four walking styles, from easy steady walking at 3.0 METs up to brisk
  walking at 6.0 METs (the interval styles mix the two),
- durations on a 5-minute grid from 5 to 30 minutes,
- frequencies of 3 to 5 sessions per week.

That yields a 72-point goal space.  ``enumerate_combos`` maps a target weekly
effort onto the grid points that approximate it; ``harder_than`` orders goals
by intensity first, then duration, then frequency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

# Weekly effort (MET-minutes) the coach steers everyone toward: the widely
# recommended 150 min/week of moderate-equivalent activity at 5 METs.
TARGET_WEEKLY_VOLUME = 750.0

DURATION_STEP_MIN = 5
MIN_DURATION_MIN = 5
MAX_DURATION_MIN = 30
FREQUENCIES = (3, 4, 5)


class Exercise(str, Enum):
    """One of the four walking styles, ordered easiest to hardest."""

    def __new__(cls, key: str, met: float, description: str) -> "Exercise":
        obj = str.__new__(cls, key)
        obj._value_ = key
        obj.met = met
        obj.description = description
        return obj

    met: float
    description: str

    MODERATE = ("moderate", 3.0, "Steady walk at an easy, conversational pace")
    INTERVAL_A = ("interval_a", 3.6, "Mostly easy walking with 1 fast minute in every 5")
    INTERVAL_B = ("interval_b", 4.8, "Mostly fast walking with 2 easy minutes in every 5")
    BRISK = ("brisk", 6.0, "Fast, purposeful walking throughout")


@dataclass(frozen=True, order=False)
class WeeklyGoal:
    """A committed week of exercise: style, minutes per session, sessions per week."""

    exercise: Exercise
    duration_min: int
    frequency: int

    def __post_init__(self) -> None:
        if not isinstance(self.exercise, Exercise):
            raise ValueError(f"unknown exercise: {self.exercise!r}")
        if (
            self.duration_min < MIN_DURATION_MIN
            or self.duration_min > MAX_DURATION_MIN
            or self.duration_min % DURATION_STEP_MIN != 0
        ):
            raise ValueError(f"duration must be 5..30 in steps of 5, got {self.duration_min}")
        if self.frequency not in FREQUENCIES:
            raise ValueError(f"frequency must be 3, 4 or 5, got {self.frequency}")

    @property
    def volume(self) -> float:
        """Weekly effort in MET-minutes."""
        return self.exercise.met * self.duration_min * self.frequency

    @property
    def sort_key(self) -> tuple[float, int, int]:
        return (self.exercise.met, self.duration_min, self.frequency)


# The goal everyone is ultimately steered to: exactly TARGET_WEEKLY_VOLUME MET-min.
TARGET_GOAL = WeeklyGoal(Exercise.BRISK, 25, 5)


def volume(goal: WeeklyGoal) -> float:
    return goal.volume


def harder_than(a: WeeklyGoal, b: WeeklyGoal) -> bool:
    """Strict "a is harder than b": by intensity, then duration, then frequency."""
    return a.sort_key > b.sort_key


def all_goals() -> list[WeeklyGoal]:
    """The full 72-goal space, easiest first."""
    goals = [
        WeeklyGoal(e, d, f)
        for e in Exercise
        for d in range(MIN_DURATION_MIN, MAX_DURATION_MIN + 1, DURATION_STEP_MIN)
        for f in FREQUENCIES
    ]
    goals.sort(key=lambda g: g.sort_key)
    return goals


def _nearest_duration(minutes: float) -> int:
    # Nearest 5-minute grid point; a dead-center remainder of 2.5 rounds up,
    # keeping the "slightly harder rather than slightly easier" bias.
    return int(math.floor(minutes / DURATION_STEP_MIN + 0.5 + 1e-9)) * DURATION_STEP_MIN


def enumerate_combos(capability: float) -> list[WeeklyGoal]:
    """Goals whose volume lands nearest a weekly capability, easiest first.

    For every (style, frequency) pair the duration that best matches
    ``capability`` is snapped to the 5-minute grid; pairs whose snapped
    duration falls outside 5..30 minutes drop out.  Duplicates collapse and
    the survivors come back sorted easiest-to-hardest (see ``harder_than``).
    """
    if capability < 0:
        raise ValueError(f"capability must be >= 0, got {capability}")
    found: dict[tuple[float, int, int], WeeklyGoal] = {}
    for e in Exercise:
        for f in FREQUENCIES:
            d = _nearest_duration(capability / (e.met * f))
            if MIN_DURATION_MIN <= d <= MAX_DURATION_MIN:
                g = WeeklyGoal(e, d, f)
                found[g.sort_key] = g
    return [found[k] for k in sorted(found)]
