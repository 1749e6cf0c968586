"""Daily check-in reports a trainee files against scheduled sessions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ReportStatus(str, Enum):
    DONE = "done"
    ALMOST = "almost"      # started but did not finish; counts as missed
    NOPE = "nope"          # did not exercise


class Reason(str, Enum):
    """Why a session was missed or cut short."""

    FORGOT = "forgot"
    NO_TIME = "no_time"
    DONT_ENJOY = "dont_enjoy"
    NOT_USEFUL = "not_useful"
    TOO_HARD = "too_hard"


# 1..5 perceived-effort scale reported after a completed session.
RPE_SCALE = {
    1: "Not tired at all",
    2: "A little tired, breathing easy",
    3: "Tired, but can still talk",
    4: "Really tired, out of breath",
    5: "So tired I had to stop",
}


@dataclass(frozen=True)
class DailyReport:
    """One day's answer: what happened with the scheduled session.

    Effort (rpe) is given exactly when the session was done; a reason exactly
    when it was not.  The two optional 1..5 self-ratings ride along unchanged.
    """

    week_index: int
    day_index: int
    status: ReportStatus
    rpe: int | None = None
    reason: Reason | None = None
    self_efficacy: int | None = None
    affective_attitude: int | None = None

    def __post_init__(self) -> None:
        if self.week_index < 1:
            raise ValueError(f"week_index must be >= 1, got {self.week_index}")
        if not 0 <= self.day_index <= 6:
            raise ValueError(f"day_index must be 0..6, got {self.day_index}")
        if self.status is ReportStatus.DONE:
            if self.rpe is None:
                raise ValueError("a done report needs an effort rating")
            if self.reason is not None:
                raise ValueError("a done report cannot carry a missed-session reason")
        else:
            if self.reason is None:
                raise ValueError("a missed session needs a reason")
            if self.rpe is not None:
                raise ValueError("effort is only rated for done sessions")
        for label, score in (
            ("rpe", self.rpe),
            ("self_efficacy", self.self_efficacy),
            ("affective_attitude", self.affective_attitude),
        ):
            if score is not None and not 1 <= score <= 5:
                raise ValueError(f"{label} must be 1..5, got {score}")
