"""The coaching engine: one trainee's whole journey as an event-sourced fold.

The engine never mutates state directly.  Each operation validates against
the current state, decides what happens (using the catalog, staircase,
planner and scheduler), emits events, and folds them in — so live state and
a replay of the log are the same computation by construction.

A trainee moves through phases:

    new -> assessed -> active -> maintaining

``active`` weeks climb the staircase; once modeled capability reaches the
target the engine holds the target-volume goal week after week and only the
safety revision (regress) still applies.  Week closure proposes the next
goal; a changed volume needs the trainee's agree/disagree, an unchanged one
commits itself.  Disagreeing keeps the old goal and delays the staircase so
the model matches what the trainee is actually willing to do.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from enum import Enum
from typing import Callable, Iterable

from . import events as ev
from .assessment import (
    AssessmentReport,
    BandAnswer,
    FirstWeekChoices,
    baseline_capability,
    first_week_choices,
    initialize_model,
)
from .catalog import TARGET_WEEKLY_VOLUME, WeeklyGoal, all_goals
from .planner import (
    REVISION_DELTA,
    Revision,
    WeekSummary,
    apply_revision,
    decide_revision,
    select_goal,
    summarize_week,
)
from .reports import DailyReport, Reason, ReportStatus
from .scheduler import DayKind, DayView, WeekSchedule, plan_week, reschedule, rolling_view
from .staircase import Staircase

_EPS = 1e-9


class Phase(str, Enum):
    NEW = "new"
    ASSESSED = "assessed"
    ACTIVE = "active"
    MAINTAINING = "maintaining"


class Direction(str, Enum):
    INCREASE = "increase"
    DECREASE = "decrease"
    STAY = "stay"


class Answer(str, Enum):
    AGREE = "agree"
    DISAGREE = "disagree"


class EngineError(ValueError):
    """An operation that the trainee's current state does not allow."""


@dataclass(frozen=True)
class Proposal:
    """Next week's goal as put to the trainee at week closure."""

    week_index: int
    goal: WeeklyGoal
    direction: Direction
    previous_goal: WeeklyGoal


@dataclass(frozen=True)
class WeekRecord:
    """One closed week, as kept in history (and exported as a trajectory row)."""

    week_index: int
    goal: WeeklyGoal
    goal_volume: float
    performed_volume: float
    mean_rpe: float | None
    revision: Revision
    done_count: int
    scheduled: int
    reasons: tuple[Reason, ...]


@dataclass(frozen=True)
class CoachState:
    trainee_id: str
    name: str = ""
    target: float = TARGET_WEEKLY_VOLUME
    phase: Phase = Phase.NEW
    last_seq: int = 0
    assessed_capability: float | None = None
    model: Staircase | None = None
    week_index: int = 0
    capability: float | None = None          # modeled capability of the current week
    committed_goal: WeeklyGoal | None = None
    week: WeekSchedule | None = None
    week_reports: tuple[DailyReport, ...] = ()
    today_index: int = 0
    pending_proposal: Proposal | None = None
    history: tuple[WeekRecord, ...] = ()


def target_volume_goal(target: float) -> WeeklyGoal:
    """The grid goal closest in volume to ``target`` (easier wins a tie)."""
    return min(all_goals(), key=lambda g: (abs(g.volume - target), g.sort_key))


# ---------------------------------------------------------------------------
# the fold

class ReplayError(ValueError):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ReplayError(message)


def fold_event(state: CoachState, event: ev.Event) -> CoachState:
    """Apply one event to the state.  The only place state ever changes."""
    _require(event.seq == state.last_seq + 1,
             f"event seq {event.seq} after {state.last_seq} (gap or duplicate)")
    _require(event.trainee_id == state.trainee_id or state.last_seq == 0,
             f"event for trainee {event.trainee_id} in stream of {state.trainee_id}")
    p = event.payload
    state = replace(state, last_seq=event.seq)

    if event.kind is ev.EventKind.TRAINEE_CREATED:
        return replace(
            state,
            trainee_id=event.trainee_id,
            name=p.get("name", ""),
            target=float(p.get("target", TARGET_WEEKLY_VOLUME)),
            phase=Phase.NEW,
        )

    if event.kind is ev.EventKind.ASSESSMENT_SUBMITTED:
        return replace(
            state,
            phase=Phase.ASSESSED,
            assessed_capability=float(p["capability"]),
        )

    if event.kind is ev.EventKind.INITIAL_GOAL_CHOSEN:
        return replace(state, model=ev.parse_model(p["model"]))

    if event.kind is ev.EventKind.WEEK_PLANNED:
        capability = float(p["capability"])
        phase = state.phase
        if phase in (Phase.ASSESSED, Phase.ACTIVE, Phase.MAINTAINING):
            phase = (
                Phase.MAINTAINING
                if capability >= state.target - _EPS
                else Phase.ACTIVE
            )
        return replace(
            state,
            phase=phase,
            week_index=int(p["week"]),
            committed_goal=ev.parse_goal(p["goal"]),
            capability=capability,
            week=None,                     # the paired day layout follows
            week_reports=(),
            today_index=0,
            pending_proposal=None,
        )

    if event.kind is ev.EventKind.DAILY_SCHEDULED:
        kinds = tuple(DayKind(k) for k in p["days"])
        week_index = int(p["week"])
        if state.week is not None and state.week.week_index == week_index:
            week = replace(state.week, kinds=kinds)   # reschedule: keep statuses
        else:
            _require(state.committed_goal is not None, "day layout before any goal")
            week = WeekSchedule(
                week_index=week_index,
                goal=state.committed_goal,
                kinds=kinds,
                statuses=(None,) * 7,
            )
        return replace(state, week=week)

    if event.kind is ev.EventKind.DAILY_REPORTED:
        report = ev.parse_report(p)
        _require(state.week is not None, "daily report before any schedule")
        return replace(
            state,
            week=state.week.with_status(report.day_index, report.status),
            week_reports=state.week_reports + (report,),
            today_index=report.day_index,
        )

    if event.kind is ev.EventKind.WEEK_CLOSED:
        _require(state.committed_goal is not None, "week closed before any goal")
        s = p["summary"]
        goal = state.committed_goal
        record = WeekRecord(
            week_index=int(p["week"]),
            goal=goal,
            goal_volume=goal.volume,
            performed_volume=goal.exercise.met * goal.duration_min * int(s["done_count"]),
            mean_rpe=s["mean_rpe"],
            revision=Revision.NONE,        # a revision_applied event may follow
            done_count=int(s["done_count"]),
            scheduled=int(s["scheduled"]),
            reasons=tuple(Reason(r) for r in s["reasons"]),
        )
        return replace(state, history=state.history + (record,))

    if event.kind is ev.EventKind.REVISION_APPLIED:
        _require(bool(state.history), "revision before any closed week")
        last = state.history[-1]
        _require(last.week_index == int(p["week"]),
                 f"revision for week {p['week']} after closing week {last.week_index}")
        last = replace(last, revision=Revision(p["revision"]))
        return replace(
            state,
            model=ev.parse_model(p["model"]),
            history=state.history[:-1] + (last,),
        )

    if event.kind is ev.EventKind.PROPOSAL_MADE:
        return replace(
            state,
            pending_proposal=Proposal(
                week_index=int(p["week"]),
                goal=ev.parse_goal(p["goal"]),
                direction=Direction(p["direction"]),
                previous_goal=ev.parse_goal(p["previous_goal"]),
            ),
        )

    if event.kind is ev.EventKind.PROPOSAL_ANSWERED:
        _require(state.pending_proposal is not None, "answer without a proposal")
        if Answer(p["answer"]) is Answer.DISAGREE:
            _require(state.model is not None, "answer before any model")
            state = replace(state, model=state.model.shift(REVISION_DELTA))
        return state

    raise ReplayError(f"unknown event kind {event.kind!r}")


def replay(stream: Iterable[ev.Event]) -> CoachState:
    """Fold a complete event stream back into trainee state."""
    state: CoachState | None = None
    for event in stream:
        if state is None:
            _require(event.kind is ev.EventKind.TRAINEE_CREATED,
                     f"stream must open with trainee_created, got {event.kind.value}")
            state = CoachState(trainee_id=event.trainee_id)
        state = fold_event(state, event)
    _require(state is not None, "empty event stream")
    return state


# ---------------------------------------------------------------------------
# the engine

Clock = Callable[[], str]


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="milliseconds")


class CoachEngine:
    """Drives one trainee: validates operations, emits events, folds state."""

    def __init__(
        self,
        state: CoachState,
        sink: Callable[[ev.Event], None] | None = None,
        clock: Clock = _utc_now,
    ) -> None:
        self.state = state
        self._sink = sink
        self._clock = clock
        self.events: list[ev.Event] = []

    # -- construction -------------------------------------------------------

    @classmethod
    def create(
        cls,
        trainee_id: str | None = None,
        name: str = "",
        target: float = TARGET_WEEKLY_VOLUME,
        sink: Callable[[ev.Event], None] | None = None,
        clock: Clock = _utc_now,
    ) -> CoachEngine:
        trainee_id = trainee_id or uuid.uuid4().hex
        engine = cls(CoachState(trainee_id=trainee_id), sink=sink, clock=clock)
        engine._emit(ev.EventKind.TRAINEE_CREATED,
                     {"v": ev.PAYLOAD_VERSION, "name": name, "target": target})
        return engine

    @classmethod
    def from_events(
        cls,
        stream: Iterable[ev.Event],
        sink: Callable[[ev.Event], None] | None = None,
        clock: Clock = _utc_now,
    ) -> CoachEngine:
        return cls(replay(stream), sink=sink, clock=clock)

    # -- internals ----------------------------------------------------------

    def _emit(self, kind: ev.EventKind, payload: dict) -> None:
        event = ev.Event(
            seq=self.state.last_seq + 1,
            ts=self._clock(),
            trainee_id=self.state.trainee_id,
            kind=kind,
            payload=payload,
        )
        self.state = fold_event(self.state, event)
        self.events.append(event)
        if self._sink is not None:
            self._sink(event)

    def _expect_phase(self, *phases: Phase) -> None:
        if self.state.phase not in phases:
            allowed = ", ".join(ph.value for ph in phases)
            raise EngineError(
                f"operation requires phase {allowed}; trainee is {self.state.phase.value}"
            )

    def _plan(self, week_index: int, goal: WeeklyGoal, capability: float) -> None:
        schedule = plan_week(goal, week_index)
        self._emit(ev.EventKind.WEEK_PLANNED, {
            "v": ev.PAYLOAD_VERSION,
            "week": week_index,
            "goal": ev.goal_payload(goal),
            "capability": capability,
        })
        self._emit(ev.EventKind.DAILY_SCHEDULED, {
            "v": ev.PAYLOAD_VERSION,
            "week": week_index,
            "days": [k.value for k in schedule.kinds],
        })

    # -- operations ---------------------------------------------------------

    def handle_assessment(self, report: AssessmentReport) -> FirstWeekChoices:
        self._expect_phase(Phase.NEW)
        capability = baseline_capability(report)
        self._emit(ev.EventKind.ASSESSMENT_SUBMITTED, {
            "v": ev.PAYLOAD_VERSION,
            "report": {
                band: {"duration_min": answer.duration_min, "frequency": answer.frequency}
                for band, answer in (
                    ("light", report.light),
                    ("moderate", report.moderate),
                    ("vigorous", report.vigorous),
                )
            },
            "capability": capability,
        })
        return first_week_choices(capability)

    def offered_choices(self) -> FirstWeekChoices:
        self._expect_phase(Phase.ASSESSED)
        assert self.state.assessed_capability is not None
        return first_week_choices(self.state.assessed_capability)

    def handle_goal_choice(self, chosen: WeeklyGoal) -> Staircase:
        self._expect_phase(Phase.ASSESSED)
        capability = self.state.assessed_capability
        assert capability is not None
        if chosen not in first_week_choices(capability).goals:
            raise EngineError(f"goal {chosen} is not among the offered first-week choices")
        model = initialize_model(capability, chosen, self.state.target)
        committed = chosen
        if capability >= self.state.target - _EPS:
            committed = target_volume_goal(self.state.target)   # hold at target volume
        self._emit(ev.EventKind.INITIAL_GOAL_CHOSEN, {
            "v": ev.PAYLOAD_VERSION,
            "goal": ev.goal_payload(chosen),
            "model": ev.model_payload(model),
            "projected_weeks": model.span,
        })
        self._plan(1, committed, model.capability_at(1))
        return model

    def handle_daily_report(self, report: DailyReport) -> WeekSchedule:
        self._expect_phase(Phase.ACTIVE, Phase.MAINTAINING)
        week = self.state.week
        assert week is not None
        if self.state.pending_proposal is not None:
            raise EngineError("the week is closed; answer the pending proposal first")
        if report.week_index != week.week_index:
            raise EngineError(
                f"report is for week {report.week_index}; current week is {week.week_index}"
            )
        if week.kinds[report.day_index] is not DayKind.SESSION:
            raise EngineError(f"day {report.day_index} is a rest day")
        if week.statuses[report.day_index] is not None:
            raise EngineError(f"day {report.day_index} already has a report")
        if self.state.week_reports and report.day_index < self.state.today_index:
            raise EngineError(
                f"day {report.day_index} is in the past (last report was day "
                f"{self.state.today_index})"
            )
        self._emit(ev.EventKind.DAILY_REPORTED,
                   {"v": ev.PAYLOAD_VERSION, **ev.report_payload(report)})
        if report.status is not ReportStatus.DONE:
            assert self.state.week is not None
            shuffled = reschedule(self.state.week, report.day_index)
            if shuffled.kinds != self.state.week.kinds:
                self._emit(ev.EventKind.DAILY_SCHEDULED, {
                    "v": ev.PAYLOAD_VERSION,
                    "week": week.week_index,
                    "days": [k.value for k in shuffled.kinds],
                })
        assert self.state.week is not None
        return self.state.week

    def close_week(self) -> Proposal:
        self._expect_phase(Phase.ACTIVE, Phase.MAINTAINING)
        if self.state.pending_proposal is not None:
            raise EngineError("previous week's proposal is still unanswered")
        state = self.state
        assert state.committed_goal is not None and state.model is not None
        assert state.capability is not None
        summary = summarize_week(list(state.week_reports), state.committed_goal)
        revision = decide_revision(summary)
        if state.phase is Phase.MAINTAINING and revision is not Revision.REGRESS:
            revision = Revision.NONE       # holding pattern: only safety applies
        model = apply_revision(state.model, revision)
        next_week = state.week_index + 1
        next_capability = model.capability_at(next_week)
        if next_capability >= state.target - _EPS:
            next_goal = target_volume_goal(state.target)
        else:
            next_goal = select_goal(next_capability, state.committed_goal, state.capability)
        if next_goal.volume > state.committed_goal.volume + _EPS:
            direction = Direction.INCREASE
        elif next_goal.volume < state.committed_goal.volume - _EPS:
            direction = Direction.DECREASE
        else:
            direction = Direction.STAY

        self._emit(ev.EventKind.WEEK_CLOSED, {
            "v": ev.PAYLOAD_VERSION,
            "week": state.week_index,
            "summary": {
                "done_count": summary.done_count,
                "scheduled": summary.scheduled,
                "mean_rpe": summary.mean_rpe,
                "reasons": [r.value for r in summary.reasons],
            },
        })
        if revision is not Revision.NONE:
            self._emit(ev.EventKind.REVISION_APPLIED, {
                "v": ev.PAYLOAD_VERSION,
                "week": state.week_index,
                "revision": revision.value,
                "model": ev.model_payload(model),
            })
        self._emit(ev.EventKind.PROPOSAL_MADE, {
            "v": ev.PAYLOAD_VERSION,
            "week": next_week,
            "goal": ev.goal_payload(next_goal),
            "direction": direction.value,
            "previous_goal": ev.goal_payload(state.committed_goal),
        })
        proposal = self.state.pending_proposal
        assert proposal is not None
        if direction is Direction.STAY:    # nothing to negotiate
            self._plan(next_week, next_goal, next_capability)
        return proposal

    def handle_proposal_response(self, answer: Answer) -> WeekSchedule:
        proposal = self.state.pending_proposal
        if proposal is None:
            raise EngineError("no proposal is awaiting an answer")
        self._emit(ev.EventKind.PROPOSAL_ANSWERED, {
            "v": ev.PAYLOAD_VERSION,
            "week": proposal.week_index,
            "answer": answer.value,
        })
        model = self.state.model
        assert model is not None
        goal = proposal.goal if answer is Answer.AGREE else proposal.previous_goal
        self._plan(proposal.week_index, goal, model.capability_at(proposal.week_index))
        assert self.state.week is not None
        return self.state.week

    # -- views --------------------------------------------------------------

    def schedule_view(self, today_index: int | None = None) -> tuple[DayView, ...]:
        """Seven days from today: rest of this week, then a provisional next week."""
        self._expect_phase(Phase.ACTIVE, Phase.MAINTAINING)
        week = self.state.week
        assert week is not None and self.state.committed_goal is not None
        today = self.state.today_index if today_index is None else today_index
        following = plan_week(self.state.committed_goal, week.week_index + 1)
        return rolling_view(week, following, today)
