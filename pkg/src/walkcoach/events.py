"""Append-only event record for a trainee, and its line format.

Every state change the engine makes is recorded as one event; trainee state
is nothing but a fold over these.  On disk a trainee is one file, one JSON
object per line:

    {"seq": 3, "ts": "...", "trainee": "ab12...", "kind": "week_planned",
     "payload": {"v": 1, ...}}

``seq`` counts from 1 without gaps per trainee.  Payloads carry their own
schema version (``"v": 1``) so old logs stay readable if fields evolve.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator

from .catalog import Exercise, WeeklyGoal
from .reports import DailyReport, Reason, ReportStatus
from .staircase import Staircase

PAYLOAD_VERSION = 1


class EventKind(str, Enum):
    TRAINEE_CREATED = "trainee_created"
    ASSESSMENT_SUBMITTED = "assessment_submitted"
    INITIAL_GOAL_CHOSEN = "initial_goal_chosen"
    WEEK_PLANNED = "week_planned"
    DAILY_SCHEDULED = "daily_scheduled"
    DAILY_REPORTED = "daily_reported"
    WEEK_CLOSED = "week_closed"
    REVISION_APPLIED = "revision_applied"
    PROPOSAL_MADE = "proposal_made"
    PROPOSAL_ANSWERED = "proposal_answered"


@dataclass(frozen=True)
class Event:
    seq: int
    ts: str
    trainee_id: str
    kind: EventKind
    payload: dict


class BadEventLine(ValueError):
    pass


def to_line(event: Event) -> str:
    return json.dumps(
        {
            "seq": event.seq,
            "ts": event.ts,
            "trainee": event.trainee_id,
            "kind": event.kind.value,
            "payload": event.payload,
        },
        separators=(",", ":"),
    )


def from_line(line: str) -> Event:
    try:
        raw = json.loads(line)
    except json.JSONDecodeError as exc:
        raise BadEventLine(f"unparseable event line: {exc}") from None
    try:
        return Event(
            seq=int(raw["seq"]),
            ts=str(raw["ts"]),
            trainee_id=str(raw["trainee"]),
            kind=EventKind(raw["kind"]),
            payload=dict(raw["payload"]),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise BadEventLine(f"malformed event record: {exc}") from None


# ---------------------------------------------------------------------------
# payload codecs: domain values <-> plain JSON-able dicts

def goal_payload(goal: WeeklyGoal) -> dict:
    return {
        "exercise": goal.exercise.value,
        "duration_min": goal.duration_min,
        "frequency": goal.frequency,
    }


def parse_goal(raw: dict) -> WeeklyGoal:
    return WeeklyGoal(
        exercise=Exercise(raw["exercise"]),
        duration_min=int(raw["duration_min"]),
        frequency=int(raw["frequency"]),
    )


def model_payload(model: Staircase) -> dict:
    return {
        "start": model.start,
        "ceiling": model.ceiling,
        "span": model.span,
        "offset": model.offset,
    }


def parse_model(raw: dict) -> Staircase:
    return Staircase(
        start=float(raw["start"]),
        ceiling=float(raw["ceiling"]),
        span=int(raw["span"]),
        offset=int(raw["offset"]),
    )


def report_payload(report: DailyReport) -> dict:
    out: dict = {
        "week": report.week_index,
        "day": report.day_index,
        "status": report.status.value,
    }
    if report.rpe is not None:
        out["rpe"] = report.rpe
    if report.reason is not None:
        out["reason"] = report.reason.value
    if report.self_efficacy is not None:
        out["self_efficacy"] = report.self_efficacy
    if report.affective_attitude is not None:
        out["affective_attitude"] = report.affective_attitude
    return out


def parse_report(raw: dict) -> DailyReport:
    return DailyReport(
        week_index=int(raw["week"]),
        day_index=int(raw["day"]),
        status=ReportStatus(raw["status"]),
        rpe=raw.get("rpe"),
        reason=Reason(raw["reason"]) if "reason" in raw else None,
        self_efficacy=raw.get("self_efficacy"),
        affective_attitude=raw.get("affective_attitude"),
    )


# ---------------------------------------------------------------------------
# file store

class EventLog:
    """Append-only per-trainee log file; every append is flushed to disk."""

    def __init__(self, path: Path) -> None:
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)

    def append(self, event: Event) -> None:
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(to_line(event) + "\n")
            fh.flush()
            os.fsync(fh.fileno())

    def read_all(self) -> list[Event]:
        if not self.path.exists():
            return []
        with open(self.path, encoding="utf-8") as fh:
            return [from_line(line) for line in fh if line.strip()]


def read_events(lines: Iterable[str]) -> Iterator[Event]:
    for line in lines:
        if line.strip():
            yield from_line(line)
