import type { Direction, ExerciseName, GoalJson, MissReason } from "./types.js";

export const EXERCISE_LABELS: Record<ExerciseName, string> = {
  moderate: "Easy walk",
  interval_a: "Walk with fast bursts",
  interval_b: "Fast walk with breathers",
  brisk: "Brisk walk",
};

// 1..5 perceived-effort scale shown after a completed session.
export const RPE_LABELS: Record<number, string> = {
  1: "Not tired at all",
  2: "A little tired, breathing easy",
  3: "Tired, but can still talk",
  4: "Really tired, out of breath",
  5: "So tired I had to stop",
};

export const REASON_LABELS: Record<MissReason, string> = {
  forgot: "I forgot",
  no_time: "No time",
  dont_enjoy: "I don't enjoy it",
  not_useful: "It doesn't feel useful",
  too_hard: "Too hard for me",
};

export const DAY_NAMES = ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"] as const;

export function dayName(dayIndex: number): string {
  return DAY_NAMES[dayIndex] ?? `Day ${dayIndex}`;
}

export function goalLabel(goal: GoalJson): string {
  return `${EXERCISE_LABELS[goal.exercise]}, ${goal.duration_min} min, ${goal.frequency}x/week`;
}

export function volumeLabel(volume: number): string {
  const rounded = Math.round(volume * 10) / 10;
  return `${rounded} MET-min`;
}

/** "about 8 weeks to your target" — the promise shown when a goal is picked. */
export function projectionLabel(weeks: number): string {
  if (weeks <= 1) return "about 1 week to your target";
  return `about ${weeks} weeks to your target`;
}

export const WEEKLY_TARGET = 750;
const MIN_WEEKLY_STEP = 45;

/**
 * Preview of the climb length for a candidate first-week goal: whole steps of
 * (goal volume - current volume) fitting under the target, never fewer than
 * one.  The committed number still comes from the service after the choice.
 */
export function projectedWeeks(
  capability: number,
  goalVolume: number,
  target: number = WEEKLY_TARGET,
): number {
  if (capability >= target) return 1;
  const step = Math.max(goalVolume - capability, MIN_WEEKLY_STEP);
  return Math.max(1, Math.floor((target - capability) / step));
}

export function directionLabel(direction: Direction): string {
  switch (direction) {
    case "increase":
      return "a step up";
    case "decrease":
      return "a step back";
    case "stay":
      return "holding steady";
  }
}

/** Percentage of the weekly target, clamped for bar rendering. */
export function percentOfTarget(volume: number, target: number = WEEKLY_TARGET): number {
  if (target <= 0) return 0;
  return Math.max(0, Math.min(100, (volume / target) * 100));
}
