"""HTTP face of the coach: one small JSON API over the event-sourced engine.

Every trainee is a single append-only log file under the data directory
(``COACH_DATA_DIR`` or ``--data-dir``); an index file maps ids to display
names.  Requests for one trainee are serialized behind a per-trainee lock,
and every event is flushed to disk before the response goes out — kill the
process whenever you like, the next start replays the logs.

Routes:

    GET  /health
    POST /trainees                             {"name"?}
    POST /trainees/{id}/assessment             questionnaire answers
    POST /trainees/{id}/goal-choice            one of the offered goals
    GET  /trainees/{id}/schedule[?today=N]     rolling 7-day view
    POST /trainees/{id}/reports                one daily report
    POST /trainees/{id}/close-week
    POST /trainees/{id}/proposal-response      {"answer": "agree"|"disagree"}
    GET  /trainees/{id}/history                full snapshot + per-week records

Errors come back as ``{"error": "..."}`` with 400 (malformed body), 404
(unknown trainee) or 409 (operation the trainee's state doesn't allow).
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .assessment import AssessmentReport, BandAnswer, FirstWeekChoices
from .catalog import Exercise, WeeklyGoal
from .engine import Answer, CoachEngine, EngineError, Phase, Proposal, WeekRecord
from .events import EventLog, parse_goal
from .reports import DailyReport, Reason, ReportStatus
from .scheduler import DayView, WeekSchedule

DEFAULT_DATA_DIR = "coach-data"


class BadRequest(ValueError):
    pass


# ---------------------------------------------------------------------------
# wire helpers

def goal_json(goal: WeeklyGoal) -> dict:
    return {
        "exercise": goal.exercise.value,
        "duration_min": goal.duration_min,
        "frequency": goal.frequency,
        "met": goal.exercise.met,
        "volume": goal.volume,
        "description": goal.exercise.description,
    }


def choices_json(choices: FirstWeekChoices) -> dict:
    return {
        "exercise": choices.exercise.value,
        "frequency": choices.frequency,
        "durations": list(choices.durations),
        "goals": [goal_json(g) for g in choices.goals],
    }


def week_json(week: WeekSchedule) -> dict:
    return {
        "week_index": week.week_index,
        "goal": goal_json(week.goal),
        "days": [
            {
                "day_index": i,
                "kind": week.kinds[i].value,
                "status": None if week.statuses[i] is None else week.statuses[i].value,
            }
            for i in range(7)
        ],
        "done_count": week.done_count,
    }


def day_view_json(view: DayView) -> dict:
    return {
        "week_index": view.week_index,
        "day_index": view.day_index,
        "kind": view.kind.value,
        "status": None if view.status is None else view.status.value,
    }


def record_json(record: WeekRecord) -> dict:
    return {
        "week_index": record.week_index,
        "goal": goal_json(record.goal),
        "goal_volume": record.goal_volume,
        "performed_volume": record.performed_volume,
        "mean_rpe": record.mean_rpe,
        "completion": record.done_count / record.scheduled,
        "done_count": record.done_count,
        "scheduled": record.scheduled,
        "reasons": [r.value for r in record.reasons],
        "revision": record.revision.value,
    }


def proposal_json(proposal: Proposal) -> dict:
    return {
        "week_index": proposal.week_index,
        "goal": goal_json(proposal.goal),
        "direction": proposal.direction.value,
        "previous_goal": goal_json(proposal.previous_goal),
    }


def _field(body: dict, key: str):
    if key not in body:
        raise BadRequest(f"missing field {key!r}")
    return body[key]


def parse_assessment(body: dict) -> AssessmentReport:
    def band(key: str) -> BandAnswer:
        raw = body.get(key, {})
        if not isinstance(raw, dict):
            raise BadRequest(f"field {key!r} must be an object")
        try:
            return BandAnswer(
                duration_min=int(raw.get("duration_min", 0)),
                frequency=int(raw.get("frequency", 0)),
            )
        except (TypeError, ValueError) as exc:
            raise BadRequest(f"bad {key} answer: {exc}") from None

    return AssessmentReport(light=band("light"), moderate=band("moderate"),
                            vigorous=band("vigorous"))


def parse_goal_body(body: dict) -> WeeklyGoal:
    try:
        return parse_goal(body)
    except (KeyError, TypeError, ValueError) as exc:
        raise BadRequest(f"bad goal: {exc}") from None


def parse_report_body(body: dict) -> DailyReport:
    try:
        return DailyReport(
            week_index=int(_field(body, "week_index")),
            day_index=int(_field(body, "day_index")),
            status=ReportStatus(_field(body, "status")),
            rpe=body.get("rpe"),
            reason=Reason(body["reason"]) if body.get("reason") is not None else None,
            self_efficacy=body.get("self_efficacy"),
            affective_attitude=body.get("affective_attitude"),
        )
    except BadRequest:
        raise
    except (TypeError, ValueError) as exc:
        raise BadRequest(f"bad report: {exc}") from None


# ---------------------------------------------------------------------------
# trainee registry backed by the data directory

class TraineeStore:
    def __init__(self, data_dir: str | Path) -> None:
        self.root = Path(data_dir)
        self.trainee_dir = self.root / "trainees"
        self.index_path = self.root / "index.json"
        self.trainee_dir.mkdir(parents=True, exist_ok=True)
        self._registry: dict[str, tuple[CoachEngine, threading.Lock]] = {}
        self._lock = threading.Lock()

    def _log(self, trainee_id: str) -> EventLog:
        return EventLog(self.trainee_dir / f"{trainee_id}.ndjson")

    def _read_index(self) -> dict:
        if self.index_path.exists():
            return json.loads(self.index_path.read_text(encoding="utf-8"))
        return {"trainees": {}}

    def _write_index(self, index: dict) -> None:
        tmp = self.index_path.with_suffix(".json.tmp")
        tmp.write_text(json.dumps(index, indent=2) + "\n", encoding="utf-8")
        os.replace(tmp, self.index_path)

    def create(self, name: str) -> CoachEngine:
        trainee_id = uuid.uuid4().hex
        log = self._log(trainee_id)
        engine = CoachEngine.create(trainee_id=trainee_id, name=name, sink=log.append)
        lock = threading.Lock()
        with self._lock:
            index = self._read_index()
            index["trainees"][trainee_id] = {"name": name}
            self._write_index(index)
            self._registry[trainee_id] = (engine, lock)
        return engine

    def get(self, trainee_id: str) -> tuple[CoachEngine, threading.Lock]:
        with self._lock:
            hit = self._registry.get(trainee_id)
            if hit is not None:
                return hit
            log = self._log(trainee_id)
            events = log.read_all()
            if not events:
                raise KeyError(trainee_id)
            engine = CoachEngine.from_events(events, sink=log.append)
            hit = (engine, threading.Lock())
            self._registry[trainee_id] = hit
            return hit


# ---------------------------------------------------------------------------
# app

def create_app(data_dir: str | Path | None = None) -> FastAPI:
    data_dir = data_dir or os.environ.get("COACH_DATA_DIR", DEFAULT_DATA_DIR)
    store = TraineeStore(data_dir)
    app = FastAPI(title="walkcoach", docs_url=None, redoc_url=None)
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(BadRequest)
    async def _bad_request(_req: Request, exc: BadRequest):
        return JSONResponse({"error": str(exc)}, status_code=400)

    @app.exception_handler(EngineError)
    async def _conflict(_req: Request, exc: EngineError):
        return JSONResponse({"error": str(exc)}, status_code=409)

    @app.exception_handler(KeyError)
    async def _not_found(_req: Request, exc: KeyError):
        return JSONResponse({"error": "unknown trainee"}, status_code=404)

    @app.exception_handler(ValueError)
    async def _value_error(_req: Request, exc: ValueError):
        return JSONResponse({"error": str(exc)}, status_code=400)

    async def body_of(request: Request) -> dict:
        raw = await request.body()
        if not raw:
            return {}
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise BadRequest(f"body is not valid JSON: {exc}") from None
        if not isinstance(body, dict):
            raise BadRequest("body must be a JSON object")
        return body

    @app.get("/health")
    async def health():
        return {"status": "ok"}

    @app.post("/trainees", status_code=201)
    async def create_trainee(request: Request):
        body = await body_of(request)
        name = str(body.get("name", ""))
        engine = store.create(name)
        return {"trainee_id": engine.state.trainee_id, "name": name}

    @app.post("/trainees/{trainee_id}/assessment")
    async def submit_assessment(trainee_id: str, request: Request):
        body = await body_of(request)
        report = parse_assessment(body)
        engine, lock = store.get(trainee_id)
        with lock:
            choices = engine.handle_assessment(report)
            return {
                "capability": engine.state.assessed_capability,
                "choices": choices_json(choices),
            }

    @app.post("/trainees/{trainee_id}/goal-choice")
    async def choose_goal(trainee_id: str, request: Request):
        body = await body_of(request)
        goal = parse_goal_body(body)
        engine, lock = store.get(trainee_id)
        with lock:
            model = engine.handle_goal_choice(goal)
            assert engine.state.week is not None
            return {
                "model": {
                    "start": model.start,
                    "ceiling": model.ceiling,
                    "span": model.span,
                    "offset": model.offset,
                    "projected_weeks": model.span + model.offset,
                },
                "committed_goal": goal_json(engine.state.committed_goal),
                "week": week_json(engine.state.week),
            }

    @app.get("/trainees/{trainee_id}/schedule")
    async def schedule(trainee_id: str, today: int | None = None):
        engine, lock = store.get(trainee_id)
        with lock:
            view = engine.schedule_view(today)
            state = engine.state
            assert state.week is not None and state.committed_goal is not None
            return {
                "week_index": state.week.week_index,
                "today_index": state.today_index if today is None else today,
                "goal": goal_json(state.committed_goal),
                "days": [day_view_json(v) for v in view],
                "done_count": state.week.done_count,
                "pending_proposal": (
                    None
                    if state.pending_proposal is None
                    else proposal_json(state.pending_proposal)
                ),
            }

    @app.post("/trainees/{trainee_id}/reports")
    async def submit_report(trainee_id: str, request: Request):
        body = await body_of(request)
        report = parse_report_body(body)
        engine, lock = store.get(trainee_id)
        with lock:
            week = engine.handle_daily_report(report)
            return {"week": week_json(week)}

    @app.post("/trainees/{trainee_id}/close-week")
    async def close_week(trainee_id: str):
        engine, lock = store.get(trainee_id)
        with lock:
            proposal = engine.close_week()
            state = engine.state
            closed = state.history[-1]
            auto = proposal.direction.value == "stay"
            return {
                "closed_week": record_json(closed),
                "revision": closed.revision.value,
                "proposal": proposal_json(proposal),
                "auto_committed": auto,
                "week": week_json(state.week) if auto and state.week else None,
            }

    @app.post("/trainees/{trainee_id}/proposal-response")
    async def answer_proposal(trainee_id: str, request: Request):
        body = await body_of(request)
        try:
            answer = Answer(str(_field(body, "answer")))
        except ValueError:
            raise BadRequest('answer must be "agree" or "disagree"') from None
        engine, lock = store.get(trainee_id)
        with lock:
            week = engine.handle_proposal_response(answer)
            assert engine.state.committed_goal is not None
            return {
                "committed_goal": goal_json(engine.state.committed_goal),
                "week": week_json(week),
            }

    @app.get("/trainees/{trainee_id}/history")
    async def history(trainee_id: str):
        engine, lock = store.get(trainee_id)
        with lock:
            state = engine.state
            out: dict = {
                "trainee_id": state.trainee_id,
                "name": state.name,
                "phase": state.phase.value,
                "target_volume": state.target,
                "weeks": [record_json(r) for r in state.history],
                "model": None,
                "choices": None,
                "current_week": None,
                "capability": state.capability,
                "pending_proposal": None,
            }
            if state.model is not None:
                out["model"] = {
                    "start": state.model.start,
                    "ceiling": state.model.ceiling,
                    "span": state.model.span,
                    "offset": state.model.offset,
                }
            if state.phase is Phase.ASSESSED:
                out["choices"] = choices_json(engine.offered_choices())
                out["capability"] = state.assessed_capability
            if state.week is not None:
                out["current_week"] = week_json(state.week)
            if state.pending_proposal is not None:
                out["pending_proposal"] = proposal_json(state.pending_proposal)
            return out

    return app
