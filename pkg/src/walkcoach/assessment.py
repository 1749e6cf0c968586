"""Intake questionnaire: from current activity to a starting plan.

The questionnaire asks, for three effort bands (light / moderate / vigorous),
how many minutes per day and days per week the trainee already moves.  Those
answers become a baseline weekly volume, which in turn fixes

- the set of first-week goals the trainee may pick from (one walking style,
  one frequency, a range of durations), and
- the capability staircase: step height equals the stretch between the chosen
  first goal and the baseline, and the number of steps is however many of
  those fit between baseline and target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import (
    Exercise,
    MAX_DURATION_MIN,
    MIN_DURATION_MIN,
    DURATION_STEP_MIN,
    FREQUENCIES,
    TARGET_WEEKLY_VOLUME,
    WeeklyGoal,
)
from .staircase import Staircase

# MET weights for the questionnaire's effort bands.
LIGHT_MET = 3.0
MODERATE_MET = 5.0
VIGOROUS_MET = 8.0

# Smallest weekly-volume increment a first week is allowed to represent; keeps
# the staircase finite when the chosen goal sits at (or below) the baseline.
MIN_STEP_VOLUME = 45.0


@dataclass(frozen=True)
class BandAnswer:
    """Minutes per day and days per week reported for one effort band."""

    duration_min: int = 0
    frequency: int = 0

    def __post_init__(self) -> None:
        if self.duration_min < 0:
            raise ValueError(f"duration must be >= 0, got {self.duration_min}")
        if not 0 <= self.frequency <= 7:
            raise ValueError(f"days per week must be 0..7, got {self.frequency}")


@dataclass(frozen=True)
class AssessmentReport:
    light: BandAnswer = BandAnswer()
    moderate: BandAnswer = BandAnswer()
    vigorous: BandAnswer = BandAnswer()


def baseline_capability(report: AssessmentReport) -> float:
    """Current weekly volume in MET-minutes implied by the questionnaire."""
    return (
        LIGHT_MET * report.light.duration_min * report.light.frequency
        + MODERATE_MET * report.moderate.duration_min * report.moderate.frequency
        + VIGOROUS_MET * report.vigorous.duration_min * report.vigorous.frequency
    )


@dataclass(frozen=True)
class FirstWeekChoices:
    """The menu offered for week 1: fixed style and frequency, pick a duration."""

    exercise: Exercise
    frequency: int
    durations: tuple[int, ...]

    @property
    def goals(self) -> tuple[WeeklyGoal, ...]:
        return tuple(WeeklyGoal(self.exercise, d, self.frequency) for d in self.durations)


def first_week_choices(capability: float) -> FirstWeekChoices:
    """Build the week-1 menu for a baseline capability.

    Style: the easiest one that can still cover the baseline at full stretch
    (30 min x 5/week).  Duration range starts at the shortest session that
    covers the baseline at some frequency; the frequency is the smallest that
    works at that duration.  A baseline beyond even brisk 30x5 collapses the
    menu to that single hardest goal.
    """
    if capability < 0:
        raise ValueError(f"capability must be >= 0, got {capability}")
    for ex in Exercise:
        if ex.met * MAX_DURATION_MIN * max(FREQUENCIES) >= capability:
            break
    else:
        return FirstWeekChoices(Exercise.BRISK, max(FREQUENCIES), (MAX_DURATION_MIN,))

    base_duration = None
    base_frequency = None
    for d in range(MIN_DURATION_MIN, MAX_DURATION_MIN + 1, DURATION_STEP_MIN):
        for f in FREQUENCIES:
            if ex.met * d * f >= capability:
                base_duration, base_frequency = d, f
                break
        if base_duration is not None:
            break
    assert base_duration is not None and base_frequency is not None

    durations = tuple(range(base_duration, MAX_DURATION_MIN + 1, DURATION_STEP_MIN))
    return FirstWeekChoices(ex, base_frequency, durations)


def initialize_model(
    capability: float,
    chosen: WeeklyGoal,
    ceiling: float = TARGET_WEEKLY_VOLUME,
) -> Staircase:
    """Fit the capability staircase to the trainee's chosen first week.

    The weekly step is the stretch from baseline to the chosen goal (floored
    at MIN_STEP_VOLUME), and the span is how many whole steps fit below the
    ceiling — at least one.  A baseline already at or past the ceiling yields
    the flat one-step staircase pinned to the ceiling (hold, don't climb).
    """
    if chosen not in first_week_choices(capability).goals:
        raise ValueError(f"goal {chosen} was not offered for capability {capability}")
    if capability >= ceiling:
        return Staircase(start=ceiling, ceiling=ceiling, span=1, offset=0)
    step = max(chosen.volume - capability, MIN_STEP_VOLUME)
    span = max(1, math.floor((ceiling - capability) / step))
    return Staircase(start=capability, ceiling=ceiling, span=span, offset=0)
