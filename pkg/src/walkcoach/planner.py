"""Week-over-week adaptation: judge the week, revise the model, pick the next goal.

The weekly loop has three moves, tried in a fixed priority order:

- regress  — the week went badly (under half done, or done but at punishing
             effort): stretch the climb AND replay the step,
- progress — the week was comfortably overdone: compress the climb,
- shift    — the week half-happened for lack of time: replay the step.

After the model is revised, the next goal is whichever grid goal best matches
next week's modeled capability without leaping past (or needlessly undoing)
what the trainee just did.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .catalog import WeeklyGoal, enumerate_combos, harder_than
from .reports import DailyReport, Reason, ReportStatus
from .staircase import Staircase

# How badly/well a week must go before the coach reacts.
COMPLETION_FLOOR = 0.5       # below this: the goal overshot the trainee
PROGRESS_COMPLETION = 0.75   # at/above this with easy effort: room to push
RPE_HARD = 4                 # average effort at/above this reads as strain
RPE_EASY = 2                 # average effort at/below this reads as slack

# Default size (in steps/weeks) of any single model revision.
REVISION_DELTA = 1

_CAPABILITY_EPS = 1e-9


class Revision(str, Enum):
    NONE = "none"
    REGRESS = "regress"
    PROGRESS = "progress"
    SHIFT = "shift"


@dataclass(frozen=True)
class WeekSummary:
    """What a closed week amounted to, as the revision rules see it."""

    goal: WeeklyGoal
    done_count: int
    scheduled: int
    mean_rpe: float | None
    reasons: tuple[Reason, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.done_count <= self.scheduled:
            raise ValueError(
                f"done_count {self.done_count} outside 0..{self.scheduled}"
            )

    @property
    def completion(self) -> float:
        return self.done_count / self.scheduled


def summarize_week(reports: list[DailyReport], goal: WeeklyGoal) -> WeekSummary:
    """Fold a week's reports into the numbers the revision rules need.

    Scheduled days that never got a report simply aren't here — they count as
    misses (through done_count < scheduled) without contributing a reason.
    """
    done = [r for r in reports if r.status is ReportStatus.DONE]
    mean_rpe = sum(r.rpe for r in done) / len(done) if done else None
    reasons = tuple(r.reason for r in reports if r.reason is not None)
    return WeekSummary(
        goal=goal,
        done_count=len(done),
        scheduled=goal.frequency,
        mean_rpe=mean_rpe,
        reasons=reasons,
    )


def decide_revision(summary: WeekSummary) -> Revision:
    """Apply the revision rules to a closed week; priority regress > progress > shift."""
    strained = (summary.mean_rpe is not None and summary.mean_rpe >= RPE_HARD) or (
        Reason.TOO_HARD in summary.reasons
    )
    if summary.completion < COMPLETION_FLOOR:
        return Revision.REGRESS
    if strained:  # completed enough, but at a cost
        return Revision.REGRESS
    if (
        summary.completion >= PROGRESS_COMPLETION
        and summary.mean_rpe is not None
        and summary.mean_rpe <= RPE_EASY
    ):
        return Revision.PROGRESS
    if summary.completion < PROGRESS_COMPLETION and Reason.NO_TIME in summary.reasons:
        return Revision.SHIFT
    return Revision.NONE


def apply_revision(
    model: Staircase, revision: Revision, delta: int = REVISION_DELTA
) -> Staircase:
    """Return the revised model; a progress on an already-minimal span is a no-op."""
    if revision is Revision.REGRESS:
        return model.change_step(+delta).shift(delta)
    if revision is Revision.PROGRESS:
        if model.span - delta < 1:
            return model
        return model.change_step(-delta)
    if revision is Revision.SHIFT:
        return model.shift(delta)
    return model


def select_goal(
    capability: float,
    previous: WeeklyGoal | None,
    previous_capability: float | None = None,
) -> WeeklyGoal:
    """Pick the goal for a week of modeled ``capability``.

    With a previous week to respect: equal capability repeats the previous
    goal; lower capability picks the easiest candidate no harder than the
    previous goal; higher capability picks the easiest candidate no easier
    than it.  An empty field after filtering falls back to the previous goal.

    A first week (no ``previous_capability``) anchors instead on the
    trainee's chosen goal: return it if the grid offers it at this
    capability, else the candidate closest in volume (easier wins a tie).
    """
    candidates = enumerate_combos(capability)
    if previous is None:
        if not candidates:
            raise ValueError(f"no feasible goal at capability {capability}")
        return candidates[0]

    if previous_capability is None:
        if previous in candidates:
            return previous
        if not candidates:
            return previous
        return min(candidates, key=lambda g: (abs(g.volume - previous.volume), g.sort_key))

    if abs(capability - previous_capability) <= _CAPABILITY_EPS:
        return previous
    if capability < previous_capability:
        fitting = [g for g in candidates if not harder_than(g, previous)]
    else:
        fitting = [g for g in candidates if not harder_than(previous, g)]
    if not fitting:
        return previous
    return fitting[0]  # candidates arrive sorted easiest-first
