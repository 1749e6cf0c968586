"""Staircase model of a trainee's weekly exercise capability.

Capability starts at a baseline, climbs by one fixed step per week, and
plateaus at the target volume: a staircase with ``span`` steps, optionally
pushed ``offset`` weeks to the right.  Two small edits cover everything the
coach ever learns about a trainee:

- ``change_step``: re-divide the climb into more (shallower) or fewer
  (steeper) steps,
- ``shift``: delay the whole staircase, replaying the current step.

Weeks are 1-based.  Capability is kept as an exact float; nothing here
rounds.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Staircase:
    """Piecewise-linear capability curve from ``start`` up to ``ceiling``."""

    start: float            # capability before any coached week
    ceiling: float          # capability the plan climbs to, then holds
    span: int               # number of weekly steps in the climb
    offset: int = 0         # weeks of delay before the climb begins

    def __post_init__(self) -> None:
        if self.start < 0:
            raise ValueError(f"start must be >= 0, got {self.start}")
        if self.ceiling < self.start:
            raise ValueError(f"ceiling {self.ceiling} below start {self.start}")
        if self.span < 1:
            raise ValueError(f"span must be >= 1, got {self.span}")
        if self.offset < 0:
            raise ValueError(f"offset must be >= 0, got {self.offset}")

    @property
    def step_height(self) -> float:
        return (self.ceiling - self.start) / self.span

    def capability_at(self, week: int) -> float:
        """Modeled capability for a 1-based week; clamped to [start, ceiling]."""
        if week < 1:
            raise ValueError(f"week must be >= 1, got {week}")
        climbed = max(0, week - self.offset)
        return min(self.ceiling, self.start + self.step_height * climbed)

    def change_step(self, delta: int) -> Staircase:
        """Stretch (+) or compress (-) the climb by ``delta`` steps."""
        if self.span + delta < 1:
            raise ValueError(f"span {self.span}{delta:+d} would drop below 1")
        return replace(self, span=self.span + delta)

    def shift(self, delta: int) -> Staircase:
        """Push the staircase ``delta`` weeks later (delta >= 0)."""
        if delta < 0:
            raise ValueError(f"shift delta must be >= 0, got {delta}")
        return replace(self, offset=self.offset + delta)
