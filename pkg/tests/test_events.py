import json

import pytest

from walkcoach.catalog import Exercise, WeeklyGoal
from walkcoach.events import (
    BadEventLine,
    Event,
    EventKind,
    EventLog,
    PAYLOAD_VERSION,
    from_line,
    goal_payload,
    model_payload,
    parse_goal,
    parse_model,
    parse_report,
    read_events,
    report_payload,
    to_line,
)
from walkcoach.reports import DailyReport, Reason, ReportStatus
from walkcoach.staircase import Staircase


def make_event(seq=1, kind=EventKind.TRAINEE_CREATED, payload=None):
    return Event(
        seq=seq,
        ts="2026-01-05T08:00:00+00:00",
        trainee_id="t1",
        kind=kind,
        payload=payload if payload is not None else {"v": PAYLOAD_VERSION},
    )


def test_line_roundtrip():
    e = make_event(payload={"v": 1, "name": "Pat"})
    assert from_line(to_line(e)) == e


def test_line_is_single_json_object_with_stable_keys():
    raw = json.loads(to_line(make_event()))
    assert list(raw) == ["seq", "ts", "trainee", "kind", "payload"]
    assert "\n" not in to_line(make_event())


def test_from_line_rejects_garbage():
    for line in ["", "not json", '{"seq": 1}', '[1,2]', '{"seq":"x","ts":"","trainee":"","kind":"trainee_created","payload":{}}']:
        with pytest.raises(BadEventLine):
            from_line(line)


def test_from_line_rejects_unknown_kind():
    line = to_line(make_event()).replace("trainee_created", "mystery_kind")
    with pytest.raises(BadEventLine):
        from_line(line)


def test_goal_payload_roundtrip():
    goal = WeeklyGoal(Exercise.INTERVAL_B, 15, 4)
    assert parse_goal(goal_payload(goal)) == goal


def test_model_payload_roundtrip():
    model = Staircase(start=150.0, ceiling=750.0, span=13, offset=2)
    assert parse_model(model_payload(model)) == model


def test_report_payload_roundtrip():
    done = DailyReport(2, 3, ReportStatus.DONE, rpe=4, self_efficacy=5)
    miss = DailyReport(2, 5, ReportStatus.NOPE, reason=Reason.DONT_ENJOY)
    assert parse_report(report_payload(done)) == done
    assert parse_report(report_payload(miss)) == miss


def test_log_appends_and_reads_back(tmp_path):
    log = EventLog(tmp_path / "t1.ndjson")
    events = [make_event(seq=i) for i in (1, 2, 3)]
    for e in events:
        log.append(e)
    assert log.read_all() == events
    # one line per event on disk
    text = (tmp_path / "t1.ndjson").read_text()
    assert text.count("\n") == 3


def test_log_reads_empty_when_missing(tmp_path):
    assert EventLog(tmp_path / "absent.ndjson").read_all() == []


def test_read_events_skips_blank_lines():
    lines = [to_line(make_event(seq=1)), "", to_line(make_event(seq=2)), "   "]
    assert [e.seq for e in read_events(lines)] == [1, 2]


def test_event_kinds_are_wire_stable():
    assert {k.value for k in EventKind} == {
        "trainee_created",
        "assessment_submitted",
        "initial_goal_chosen",
        "week_planned",
        "daily_scheduled",
        "daily_reported",
        "week_closed",
        "revision_applied",
        "proposal_made",
        "proposal_answered",
    }
