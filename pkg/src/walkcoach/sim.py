"""Scripted trainees for exercising the whole coaching loop.

A profile answers the intake questionnaire, picks a first-week goal, and then
behaves the same way every week: comply fully at a comfortable effort, unless
the goal crosses the profile's "too much" thresholds (session length and/or
intensity), in which case only a fraction of sessions happen and the ones
that do are reported as hard work.

Three profiles are built in:

- ``A`` — sedentary baseline, always complies, never strains.
- ``B`` — same baseline, but struggles past 20-minute sessions or anything
  above the easiest walking style (half compliance, effort 4).
- ``C`` — already walks a little (moderate 10 min x 3/week), same struggle
  thresholds as B.

Which planned sessions get skipped in a struggling week varies with the seed;
how many (and so completion, effort and the resulting revision) does not.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import Iterable

from .assessment import AssessmentReport, BandAnswer, FirstWeekChoices
from .catalog import WeeklyGoal
from .engine import Answer, CoachEngine, CoachState, Direction, Proposal, WeekRecord
from .events import Event
from .reports import DailyReport, Reason, ReportStatus
from .scheduler import DayKind

CSV_HEADER = (
    "week",
    "goal_type",
    "duration",
    "frequency",
    "goal_volume",
    "performed_volume",
    "mean_rpe",
    "revision",
)

_CHOICE_RULES = ("easiest", "one_step_up", "hardest")


@dataclass(frozen=True)
class TraineeProfile:
    """A deterministic behavioral script for one simulated trainee."""

    name: str
    assessment: AssessmentReport = AssessmentReport()
    initial_choice: str | int = "one_step_up"    # rule name, or an index into the menu
    hard_duration_over: int | None = None        # minutes; None = never too long
    hard_intensity_over: float | None = None     # METs; None = never too intense
    compliance_when_hard: float = 0.5            # fraction of sessions done then
    rpe_ok: int = 3
    rpe_hard: int = 4
    miss_reason: Reason = Reason.TOO_HARD
    negotiation: str = "always_agree"            # or "always_disagree"

    def __post_init__(self) -> None:
        if isinstance(self.initial_choice, str) and self.initial_choice not in _CHOICE_RULES:
            raise ValueError(
                f"initial_choice must be one of {_CHOICE_RULES} or an index, "
                f"got {self.initial_choice!r}"
            )
        if self.negotiation not in ("always_agree", "always_disagree"):
            raise ValueError(f"unknown negotiation rule {self.negotiation!r}")
        if not 0.0 <= self.compliance_when_hard <= 1.0:
            raise ValueError("compliance_when_hard must be within 0..1")

    def struggles_with(self, goal: WeeklyGoal) -> bool:
        too_long = (
            self.hard_duration_over is not None
            and goal.duration_min > self.hard_duration_over
        )
        too_intense = (
            self.hard_intensity_over is not None
            and goal.exercise.met > self.hard_intensity_over
        )
        return too_long or too_intense

    def pick_first_goal(self, choices: FirstWeekChoices) -> WeeklyGoal:
        goals = choices.goals
        if isinstance(self.initial_choice, int):
            return goals[min(self.initial_choice, len(goals) - 1)]
        if self.initial_choice == "easiest":
            return goals[0]
        if self.initial_choice == "hardest":
            return goals[-1]
        return goals[1] if len(goals) > 1 else goals[0]   # one modest step up

    def answer_for(self, proposal: Proposal) -> Answer:
        return Answer.AGREE if self.negotiation == "always_agree" else Answer.DISAGREE


def builtin_profile(name: str) -> TraineeProfile:
    """The built-in A/B/C profiles; raises ValueError for anything else."""
    key = name.strip().upper()
    if key == "A":
        return TraineeProfile(name="A")
    if key == "B":
        return TraineeProfile(
            name="B", hard_duration_over=20, hard_intensity_over=3.0
        )
    if key == "C":
        return TraineeProfile(
            name="C",
            assessment=AssessmentReport(moderate=BandAnswer(duration_min=10, frequency=3)),
            hard_duration_over=20,
            hard_intensity_over=3.0,
        )
    raise ValueError(f"unknown built-in profile {name!r} (expected A, B or C)")


def load_profile(path: str | Path) -> TraineeProfile:
    """Read a custom profile from a JSON file."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))

    def band(key: str) -> BandAnswer:
        b = raw.get("assessment", {}).get(key, {})
        return BandAnswer(
            duration_min=int(b.get("duration_min", 0)),
            frequency=int(b.get("frequency", 0)),
        )

    return TraineeProfile(
        name=str(raw.get("name", Path(path).stem)),
        assessment=AssessmentReport(
            light=band("light"), moderate=band("moderate"), vigorous=band("vigorous")
        ),
        initial_choice=raw.get("initial_choice", "one_step_up"),
        hard_duration_over=raw.get("hard_duration_over"),
        hard_intensity_over=raw.get("hard_intensity_over"),
        compliance_when_hard=float(raw.get("compliance_when_hard", 0.5)),
        rpe_ok=int(raw.get("rpe_ok", 3)),
        rpe_hard=int(raw.get("rpe_hard", 4)),
        miss_reason=Reason(raw.get("miss_reason", "too_hard")),
        negotiation=raw.get("negotiation", "always_agree"),
    )


@dataclass(frozen=True)
class SimulationResult:
    profile: TraineeProfile
    seed: int
    weeks: int
    records: tuple[WeekRecord, ...]
    events: tuple[Event, ...]
    state: CoachState

    @property
    def goal_volumes(self) -> tuple[float, ...]:
        return tuple(r.goal_volume for r in self.records)


class _SimClock:
    """Synthetic timestamps: one calendar day per simulated day."""

    def __init__(self) -> None:
        self.base = datetime(2026, 1, 5, 8, 0, tzinfo=timezone.utc)  # a Monday
        self.days = 0

    def set_day(self, week_index: int, day_index: int) -> None:
        self.days = (week_index - 1) * 7 + day_index

    def __call__(self) -> str:
        return (self.base + timedelta(days=self.days)).isoformat()


def simulate(profile: TraineeProfile, weeks: int, seed: int) -> SimulationResult:
    """Run ``weeks`` full coached weeks for a profile; deterministic per seed."""
    if weeks < 1:
        raise ValueError(f"weeks must be >= 1, got {weeks}")
    rng = random.Random(seed)
    clock = _SimClock()
    engine = CoachEngine.create(
        trainee_id=f"sim-{profile.name.lower()}-seed{seed}",
        name=profile.name,
        clock=clock,
    )
    choices = engine.handle_assessment(profile.assessment)
    engine.handle_goal_choice(profile.pick_first_goal(choices))

    for week in range(1, weeks + 1):
        goal = engine.state.committed_goal
        assert goal is not None
        hard = profile.struggles_with(goal)
        quota = (
            math.ceil(goal.frequency * profile.compliance_when_hard)
            if hard
            else goal.frequency
        )
        rpe = profile.rpe_hard if hard else profile.rpe_ok

        for day in range(7):
            clock.set_day(week, day)
            schedule = engine.state.week
            assert schedule is not None
            if schedule.kinds[day] is not DayKind.SESSION:
                continue
            done = schedule.done_count
            if done >= quota:
                do_it = False                     # quota met; decline the rest
            elif quota - done > 6 - day:
                do_it = True                      # can't afford to skip today
            elif not hard:
                do_it = True
            else:
                do_it = rng.random() < 0.6        # seed decides which days slip
            if do_it:
                report = DailyReport(
                    week_index=week, day_index=day,
                    status=ReportStatus.DONE, rpe=rpe,
                )
            else:
                report = DailyReport(
                    week_index=week, day_index=day,
                    status=ReportStatus.NOPE, reason=profile.miss_reason,
                )
            engine.handle_daily_report(report)

        clock.set_day(week + 1, 0)                # the week is over; close it
        proposal = engine.close_week()
        if proposal.direction is not Direction.STAY:
            engine.handle_proposal_response(profile.answer_for(proposal))

    return SimulationResult(
        profile=profile,
        seed=seed,
        weeks=weeks,
        records=tuple(engine.state.history[:weeks]),
        events=tuple(engine.events),
        state=engine.state,
    )


def trajectory_csv(records: Iterable[WeekRecord]) -> str:
    """Render week records as the trajectory CSV (header + one row per week)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([
            r.week_index,
            r.goal.exercise.value,
            r.goal.duration_min,
            r.goal.frequency,
            f"{r.goal_volume:g}",
            f"{r.performed_volume:g}",
            "" if r.mean_rpe is None else f"{r.mean_rpe:g}",
            r.revision.value,
        ])
    return out.getvalue()
