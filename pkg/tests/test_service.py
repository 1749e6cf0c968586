"""HTTP surface: one trainee pushed through the whole loop over the wire."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from walkcoach.service import create_app


@pytest.fixture
def client(tmp_path):
    return TestClient(create_app(tmp_path))


def onboard(client, name="Pat"):
    trainee_id = client.post("/trainees", json={"name": name}).json()["trainee_id"]
    client.post(f"/trainees/{trainee_id}/assessment", json={})
    choices = client.get(f"/trainees/{trainee_id}/history").json()["choices"]["goals"]
    goal = choices[1]
    client.post(f"/trainees/{trainee_id}/goal-choice", json={
        "exercise": goal["exercise"],
        "duration_min": goal["duration_min"],
        "frequency": goal["frequency"],
    })
    return trainee_id


def run_week(client, trainee_id, week, rpe=3):
    days = client.get(f"/trainees/{trainee_id}/schedule").json()["days"]
    for d in days:
        if d["week_index"] == week and d["kind"] == "session":
            r = client.post(f"/trainees/{trainee_id}/reports", json={
                "week_index": week, "day_index": d["day_index"],
                "status": "done", "rpe": rpe,
            })
            assert r.status_code == 200, r.text
    closed = client.post(f"/trainees/{trainee_id}/close-week", json={}).json()
    if closed.get("proposal") and not closed.get("auto_committed"):
        client.post(f"/trainees/{trainee_id}/proposal-response", json={"answer": "agree"})
    return closed


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_create_trainee(client):
    r = client.post("/trainees", json={"name": "Sam"})
    assert r.status_code == 201
    assert r.json()["name"] == "Sam"


def test_assessment_returns_choices(client):
    trainee_id = client.post("/trainees", json={"name": "Pat"}).json()["trainee_id"]
    r = client.post(f"/trainees/{trainee_id}/assessment", json={
        "moderate": {"duration_min": 10, "frequency": 3},
    })
    assert r.status_code == 200
    body = r.json()
    assert body["capability"] == 150.0
    assert all(g["volume"] >= 150.0 for g in body["choices"]["goals"])


def test_goal_choice_reports_the_projection(client):
    trainee_id = client.post("/trainees", json={"name": "Pat"}).json()["trainee_id"]
    client.post(f"/trainees/{trainee_id}/assessment", json={})
    r = client.post(f"/trainees/{trainee_id}/goal-choice", json={
        "exercise": "moderate", "duration_min": 10, "frequency": 3,
    })
    assert r.status_code == 200
    body = r.json()
    assert body["model"]["span"] == 8
    assert body["model"]["projected_weeks"] == 8
    assert body["week"]["week_index"] == 1


def test_schedule_is_a_seven_day_window(client):
    trainee_id = onboard(client)
    r = client.get(f"/trainees/{trainee_id}/schedule?today=3")
    assert r.status_code == 200
    days = r.json()["days"]
    assert len(days) == 7
    assert days[0]["week_index"] == 1 and days[0]["day_index"] == 3
    assert days[-1]["week_index"] == 2


def test_full_loop_reaches_maintenance(client):
    trainee_id = onboard(client)
    for week in range(1, 9):
        run_week(client, trainee_id, week)
    history = client.get(f"/trainees/{trainee_id}/history").json()
    volumes = [w["goal_volume"] for w in history["weeks"]]
    assert volumes == [90.0, 180.0, 300.0, 375.0, 450.0, 540.0, 600.0, 750.0]
    assert history["phase"] == "maintaining"
    assert history["capability"] == 750.0


def test_close_week_surfaces_the_proposal(client):
    trainee_id = onboard(client)
    days = client.get(f"/trainees/{trainee_id}/schedule").json()["days"]
    for d in days:
        if d["week_index"] == 1 and d["kind"] == "session":
            client.post(f"/trainees/{trainee_id}/reports", json={
                "week_index": 1, "day_index": d["day_index"],
                "status": "done", "rpe": 1,
            })
    closed = client.post(f"/trainees/{trainee_id}/close-week", json={}).json()
    assert closed["closed_week"]["completion"] == 1.0
    assert closed["proposal"]["direction"] == "increase"
    # disagreeing keeps the old goal for week 2
    r = client.post(f"/trainees/{trainee_id}/proposal-response", json={"answer": "disagree"})
    assert r.status_code == 200
    assert r.json()["committed_goal"]["volume"] == 90.0


def test_reports_reject_rest_days_with_conflict(client):
    trainee_id = onboard(client)
    days = client.get(f"/trainees/{trainee_id}/schedule").json()["days"]
    rest = next(d for d in days if d["kind"] == "rest" and d["week_index"] == 1)
    r = client.post(f"/trainees/{trainee_id}/reports", json={
        "week_index": 1, "day_index": rest["day_index"], "status": "done", "rpe": 3,
    })
    assert r.status_code == 409


def test_malformed_bodies_get_400(client):
    trainee_id = onboard(client)
    r = client.post(f"/trainees/{trainee_id}/reports", json={"week_index": 1})
    assert r.status_code == 400
    r = client.post(f"/trainees/{trainee_id}/reports", json={
        "week_index": 1, "day_index": 1, "status": "done", "rpe": 9,
    })
    assert r.status_code == 400


def test_unknown_trainee_gets_404(client):
    assert client.get("/trainees/deadbeef/history").status_code == 404
    assert client.post("/trainees/deadbeef/close-week", json={}).status_code == 404


def test_restart_preserves_observable_state(tmp_path):
    first = TestClient(create_app(tmp_path))
    trainee_id = onboard(first)
    run_week(first, trainee_id, 1)
    before = first.get(f"/trainees/{trainee_id}/history").json()

    second = TestClient(create_app(tmp_path))
    after = second.get(f"/trainees/{trainee_id}/history").json()
    assert after == before
    # and the rebuilt engine keeps working
    closed = run_week(second, trainee_id, 2)
    assert closed["closed_week"]["week_index"] == 2
