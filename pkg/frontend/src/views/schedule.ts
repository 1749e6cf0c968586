// The week at a glance: a 7-day rolling strip plus the daily report form.

import type {
  DayViewJson,
  GoalJson,
  MissReason,
  ReportBody,
  ReportStatus,
  ScheduleResponse,
} from "../types.js";
import {
  REASON_LABELS,
  RPE_LABELS,
  dayName,
  goalLabel,
  volumeLabel,
} from "../format.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

const STATUS_BADGES: Record<ReportStatus, string> = {
  done: "✓ done",
  almost: "~ almost",
  nope: "✗ missed",
};

function dayCard(day: DayViewJson, isToday: boolean): HTMLElement {
  const classes = ["day-card", day.kind];
  if (isToday) classes.push("today");
  if (day.status) classes.push(`status-${day.status}`);
  const card = el("div", classes.join(" "));
  card.dataset["week"] = String(day.week_index);
  card.dataset["day"] = String(day.day_index);
  card.append(el("div", "day-name", dayName(day.day_index)));
  card.append(el("div", "day-kind", day.kind === "session" ? "walk" : "rest"));
  if (day.status) card.append(el("div", "day-status", STATUS_BADGES[day.status]));
  else if (isToday && day.kind === "session") card.append(el("div", "day-status", "today"));
  return card;
}

export function renderScheduleStrip(
  schedule: ScheduleResponse,
): HTMLElement {
  const card = el("section", "card");
  const heading = el("h2", undefined, `Week ${schedule.week_index}`);
  card.append(heading);
  card.append(
    el(
      "p",
      "muted",
      `${goalLabel(schedule.goal)} · ${volumeLabel(schedule.goal.volume)} · ` +
        `${schedule.done_count}/${schedule.goal.frequency} done`,
    ),
  );
  const strip = el("div", "day-strip");
  for (const day of schedule.days) {
    const isToday =
      day.week_index === schedule.week_index && day.day_index === schedule.today_index;
    strip.append(dayCard(day, isToday));
  }
  card.append(strip);
  return card;
}

export interface ReportFormHandlers {
  onSubmit: (report: ReportBody) => void;
  onCloseWeek: () => void;
}

export function renderReportForm(
  goal: GoalJson,
  weekIndex: number,
  reportableDays: number[],
  handlers: ReportFormHandlers,
): HTMLElement {
  const card = el("section", "card");
  card.append(el("h2", undefined, "How did it go?"));
  const form = el("form");

  const dayRow = el("div", "field-row");
  dayRow.append(el("label", undefined, "Day"));
  const daySelect = el("select");
  for (const day of reportableDays) {
    const option = el("option", undefined, dayName(day));
    option.value = String(day);
    daySelect.append(option);
  }
  dayRow.append(daySelect);
  form.append(dayRow);

  const statusRow = el("div", "field-row");
  statusRow.append(el("label", undefined, "What happened"));
  const statusSelect = el("select");
  for (const [value, label] of [
    ["done", `Walked the ${goal.duration_min} minutes`],
    ["almost", "Started, couldn't finish"],
    ["nope", "Didn't get to it"],
  ] as const) {
    const option = el("option", undefined, label);
    option.value = value;
    statusSelect.append(option);
  }
  statusRow.append(statusSelect);
  form.append(statusRow);

  const rpeRow = el("div", "field-row");
  rpeRow.append(el("label", undefined, "How hard was it?"));
  const rpeSelect = el("select");
  for (const score of [1, 2, 3, 4, 5]) {
    const option = el("option", undefined, `${score} — ${RPE_LABELS[score]}`);
    option.value = String(score);
    if (score === 3) option.selected = true;
    rpeSelect.append(option);
  }
  rpeRow.append(rpeSelect);
  form.append(rpeRow);

  const reasonRow = el("div", "field-row hidden");
  reasonRow.append(el("label", undefined, "What got in the way?"));
  const reasonSelect = el("select");
  for (const [value, label] of Object.entries(REASON_LABELS)) {
    const option = el("option", undefined, label);
    option.value = value;
    reasonSelect.append(option);
  }
  reasonRow.append(reasonSelect);
  form.append(reasonRow);

  statusSelect.addEventListener("change", () => {
    const isDone = statusSelect.value === "done";
    rpeRow.classList.toggle("hidden", !isDone);
    reasonRow.classList.toggle("hidden", isDone);
  });

  const actions = el("div", "actions");
  const submit = el("button", "primary", "Save report");
  submit.type = "submit";
  const close = el("button", "secondary", "Close the week");
  close.type = "button";
  close.addEventListener("click", () => handlers.onCloseWeek());
  actions.append(submit, close);
  form.append(actions);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    if (reportableDays.length === 0) return;
    const status = statusSelect.value as ReportStatus;
    const report: ReportBody = {
      week_index: weekIndex,
      day_index: Number(daySelect.value),
      status,
    };
    if (status === "done") report.rpe = Number(rpeSelect.value);
    else report.reason = reasonSelect.value as MissReason;
    handlers.onSubmit(report);
  });

  if (reportableDays.length === 0) {
    submit.disabled = true;
    daySelect.disabled = true;
    form.prepend(el("p", "muted", "Every scheduled day has a report. Close the week when you're ready."));
  }
  card.append(form);
  return card;
}
