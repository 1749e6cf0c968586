"""walkcoach: an adaptive weekly walking-exercise coach.

Assess a trainee's baseline, fit a capability staircase, commit one weekly
goal at a time, schedule and repair daily sessions, and revise the plan from
what actually got reported — all recorded as an append-only event log.
"""

from .assessment import (
    AssessmentReport,
    BandAnswer,
    FirstWeekChoices,
    baseline_capability,
    first_week_choices,
    initialize_model,
)
from .catalog import (
    Exercise,
    TARGET_GOAL,
    TARGET_WEEKLY_VOLUME,
    WeeklyGoal,
    all_goals,
    enumerate_combos,
    harder_than,
    volume,
)
from .engine import (
    Answer,
    CoachEngine,
    CoachState,
    Direction,
    EngineError,
    Phase,
    Proposal,
    WeekRecord,
    replay,
)
from .planner import (
    Revision,
    WeekSummary,
    apply_revision,
    decide_revision,
    select_goal,
    summarize_week,
)
from .reports import DailyReport, Reason, ReportStatus, RPE_SCALE
from .scheduler import (
    DayKind,
    DayView,
    WeekSchedule,
    plan_week,
    reschedule,
    rolling_view,
)
from .staircase import Staircase

__version__ = "0.1.0"

__all__ = [
    "AssessmentReport",
    "BandAnswer",
    "FirstWeekChoices",
    "baseline_capability",
    "first_week_choices",
    "initialize_model",
    "Exercise",
    "TARGET_GOAL",
    "TARGET_WEEKLY_VOLUME",
    "WeeklyGoal",
    "all_goals",
    "enumerate_combos",
    "harder_than",
    "volume",
    "Answer",
    "CoachEngine",
    "CoachState",
    "Direction",
    "EngineError",
    "Phase",
    "Proposal",
    "WeekRecord",
    "replay",
    "Revision",
    "WeekSummary",
    "apply_revision",
    "decide_revision",
    "select_goal",
    "summarize_week",
    "DailyReport",
    "Reason",
    "ReportStatus",
    "RPE_SCALE",
    "DayKind",
    "DayView",
    "WeekSchedule",
    "plan_week",
    "reschedule",
    "rolling_view",
    "Staircase",
]
