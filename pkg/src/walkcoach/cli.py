"""``coach`` command line: simulate trainees, serve the API, run a local session.

Subcommands:

    coach catalog    print the exercise table and goal-space bounds
    coach schedule   lay out a week for a goal (sessions vs rest days)
    coach sim        run a scripted trainee and emit the trajectory CSV
    coach serve      start the HTTP service
    coach session    interactive local coaching session (state on disk)
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .assessment import AssessmentReport, BandAnswer
from .catalog import (
    Exercise,
    FREQUENCIES,
    MAX_DURATION_MIN,
    MIN_DURATION_MIN,
    TARGET_WEEKLY_VOLUME,
    WeeklyGoal,
)
from .engine import Answer, CoachEngine, Direction, EngineError, Phase
from .events import EventLog
from .reports import RPE_SCALE, DailyReport, Reason, ReportStatus
from .scheduler import DayKind, plan_week
from .sim import builtin_profile, load_profile, simulate, trajectory_csv


def _cmd_catalog(_args: argparse.Namespace) -> int:
    print(f"{'exercise':<12} {'METs':>5}  description")
    print("-" * 64)
    for ex in Exercise:
        print(f"{ex.value:<12} {ex.met:>5.1f}  {ex.description}")
    print("-" * 64)
    print(f"durations: {MIN_DURATION_MIN}..{MAX_DURATION_MIN} min in 5-min steps; "
          f"frequencies: {', '.join(map(str, FREQUENCIES))} per week")
    print(f"weekly target: {TARGET_WEEKLY_VOLUME:g} MET-min")
    return 0


def _cmd_schedule(args: argparse.Namespace) -> int:
    try:
        goal = WeeklyGoal(Exercise(args.exercise), args.duration, args.frequency)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    week = plan_week(goal, args.week)
    names = ("mon", "tue", "wed", "thu", "fri", "sat", "sun")
    print(f"week {week.week_index}: {goal.exercise.value} {goal.duration_min} min "
          f"x {goal.frequency}/week ({goal.volume:g} MET-min)")
    for i, kind in enumerate(week.kinds):
        mark = f"{goal.duration_min} min {goal.exercise.value}" \
            if kind is DayKind.SESSION else "rest"
        print(f"  day {i} ({names[i]}): {mark}")
    return 0


def _cmd_sim(args: argparse.Namespace) -> int:
    try:
        if args.profile.upper() in ("A", "B", "C"):
            profile = builtin_profile(args.profile)
        else:
            profile = load_profile(args.profile)
    except (OSError, ValueError) as exc:
        print(f"error: unusable profile {args.profile!r}: {exc}", file=sys.stderr)
        return 2
    result = simulate(profile, weeks=args.weeks, seed=args.seed)
    csv_text = trajectory_csv(result.records)
    if args.out:
        Path(args.out).write_text(csv_text, encoding="utf-8")
        print(f"wrote {args.weeks}-week trajectory for {profile.name} to {args.out}")
    else:
        sys.stdout.write(csv_text)
    if args.events:
        from .events import to_line
        with open(args.events, "w", encoding="utf-8") as fh:
            for event in result.events:
                fh.write(to_line(event) + "\n")
        print(f"wrote {len(result.events)} events to {args.events}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(args.data_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


# ---------------------------------------------------------------------------
# interactive session helpers

def _ask_int(prompt: str, lo: int, hi: int, default: int | None = None) -> int:
    while True:
        raw = input(prompt).strip()
        if not raw and default is not None:
            return default
        try:
            value = int(raw)
        except ValueError:
            print(f"  please enter a number ({lo}..{hi})")
            continue
        if lo <= value <= hi:
            return value
        print(f"  out of range ({lo}..{hi})")


def _session_assess(engine: CoachEngine) -> None:
    print("\nQuick intake — your current weekly movement.")
    bands = {}
    for key, label in (
        ("light", "light activity (easy walking)"),
        ("moderate", "moderate activity (breaking a sweat)"),
        ("vigorous", "vigorous activity (hard breathing)"),
    ):
        print(f"- {label}")
        minutes = _ask_int("    minutes per day [0]: ", 0, 600, default=0)
        days = _ask_int("    days per week [0]: ", 0, 7, default=0)
        bands[key] = BandAnswer(duration_min=minutes, frequency=days)
    choices = engine.handle_assessment(AssessmentReport(**bands))
    print(f"\nBaseline: {engine.state.assessed_capability:g} MET-min/week.")
    _session_choose(engine, choices)


def _session_choose(engine: CoachEngine, choices=None) -> None:
    if choices is None:
        choices = engine.offered_choices()
    print("Pick your first week:")
    for i, g in enumerate(choices.goals):
        print(f"  [{i}] {g.exercise.value} {g.duration_min} min x {g.frequency}/week "
              f"({g.volume:g} MET-min)")
    pick = _ask_int("choice: ", 0, len(choices.goals) - 1)
    model = engine.handle_goal_choice(choices.goals[pick])
    print(f"Plan set — about {model.span} week(s) to the weekly target.")


def _session_week(engine: CoachEngine) -> bool:
    """One pass over the active week; returns False when the user quits."""
    state = engine.state
    week = state.week
    assert week is not None and state.committed_goal is not None
    goal = state.committed_goal
    print(f"\nWeek {week.week_index}: {goal.exercise.value} {goal.duration_min} min "
          f"x {goal.frequency} ({goal.volume:g} MET-min); "
          f"{week.done_count}/{goal.frequency} done")
    for i, kind in enumerate(week.kinds):
        status = week.statuses[i]
        shown = status.value if status else kind.value
        print(f"  day {i}: {shown}")
    print("commands: r = report a day, c = close the week, q = quit")
    cmd = input("> ").strip().lower()
    if cmd == "q":
        return False
    if cmd == "r":
        day = _ask_int("day (0-6): ", 0, 6)
        print("  1 = did it, 2 = almost, 3 = didn't")
        what = _ask_int("what happened: ", 1, 3)
        try:
            if what == 1:
                for score, label in RPE_SCALE.items():
                    print(f"    {score}: {label}")
                rpe = _ask_int("  how hard was it (1-5): ", 1, 5)
                report = DailyReport(week.week_index, day, ReportStatus.DONE, rpe=rpe)
            else:
                reasons = list(Reason)
                for i, reason in enumerate(reasons):
                    print(f"    {i}: {reason.value}")
                idx = _ask_int("  why: ", 0, len(reasons) - 1)
                status = ReportStatus.ALMOST if what == 2 else ReportStatus.NOPE
                report = DailyReport(week.week_index, day, status, reason=reasons[idx])
            engine.handle_daily_report(report)
        except EngineError as exc:
            print(f"  can't record that: {exc}")
        return True
    if cmd == "c":
        proposal = engine.close_week()
        closed = engine.state.history[-1]
        print(f"week {closed.week_index} closed: {closed.done_count}/{closed.scheduled} "
              f"done, revision: {closed.revision.value}")
        if proposal.direction is Direction.STAY:
            print(f"next week stays at {proposal.goal.volume:g} MET-min — committed.")
            return True
        print(f"proposal ({proposal.direction.value}): {proposal.goal.exercise.value} "
              f"{proposal.goal.duration_min} min x {proposal.goal.frequency} "
              f"({proposal.goal.volume:g} MET-min)")
        raw = input("agree? [y/n]: ").strip().lower()
        answer = Answer.AGREE if raw in ("", "y", "yes") else Answer.DISAGREE
        engine.handle_proposal_response(answer)
        print(f"week {engine.state.week_index} planned: "
              f"{engine.state.committed_goal.volume:g} MET-min")
        return True
    print("unknown command")
    return True


def _cmd_session(args: argparse.Namespace) -> int:
    data_dir = Path(args.data_dir)
    logs = data_dir / "trainees"
    trainee_id = args.trainee or "local"
    log = EventLog(logs / f"{trainee_id}.ndjson")
    events = log.read_all()
    if events:
        engine = CoachEngine.from_events(events, sink=log.append)
        print(f"resuming trainee {trainee_id!r} (phase: {engine.state.phase.value})")
    else:
        engine = CoachEngine.create(trainee_id=trainee_id, name=args.name or trainee_id,
                                    sink=log.append)
        print(f"new trainee {trainee_id!r}")
    try:
        while True:
            phase = engine.state.phase
            if phase is Phase.NEW:
                _session_assess(engine)
            elif phase is Phase.ASSESSED:
                _session_choose(engine)
            elif not _session_week(engine):
                break
    except (EOFError, KeyboardInterrupt):
        print()
    print(f"saved to {log.path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coach",
                                     description="adaptive walking-exercise coach")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="print the exercise table").set_defaults(
        fn=_cmd_catalog)

    p = sub.add_parser("schedule", help="lay out one week for a goal")
    p.add_argument("--exercise", required=True,
                   choices=[e.value for e in Exercise])
    p.add_argument("--duration", type=int, required=True, help="minutes per session")
    p.add_argument("--frequency", type=int, required=True, help="sessions per week")
    p.add_argument("--week", type=int, default=1)
    p.set_defaults(fn=_cmd_schedule)

    p = sub.add_parser("sim", help="simulate a scripted trainee")
    p.add_argument("--profile", default="A",
                   help="A, B, C, or a path to a profile JSON file")
    p.add_argument("--weeks", type=int, default=8)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", help="write the trajectory CSV here instead of stdout")
    p.add_argument("--events", help="also dump the raw event log to this file")
    p.set_defaults(fn=_cmd_sim)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--data-dir",
                   default=os.environ.get("COACH_DATA_DIR", "coach-data"))
    p.set_defaults(fn=_cmd_serve)

    p = sub.add_parser("session", help="interactive local coaching session")
    p.add_argument("--data-dir",
                   default=os.environ.get("COACH_DATA_DIR", "coach-data"))
    p.add_argument("--trainee", help="trainee id to resume or create (default: local)")
    p.add_argument("--name", help="display name for a new trainee")
    p.set_defaults(fn=_cmd_session)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
