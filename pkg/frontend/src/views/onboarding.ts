// Intake flow: name -> three-band questionnaire -> first-week menu.

import type { AssessmentBody, ChoicesJson, GoalJson } from "../types.js";
import { goalLabel, projectionLabel, volumeLabel } from "../format.js";

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

export function renderNameForm(onSubmit: (name: string) => void): HTMLElement {
  const card = el("section", "card");
  card.append(el("h2", undefined, "Welcome"));
  card.append(
    el("p", "muted", "Let's set up your walking plan. What should we call you?"),
  );
  const form = el("form");
  const input = el("input");
  input.name = "name";
  input.placeholder = "Your name";
  input.required = true;
  const button = el("button", "primary", "Start");
  form.append(input, button);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const name = input.value.trim();
    if (name) onSubmit(name);
  });
  card.append(form);
  return card;
}

interface BandSpec {
  key: keyof AssessmentBody;
  label: string;
  hint: string;
}

const BANDS: BandSpec[] = [
  { key: "light", label: "Light activity", hint: "easy walking, light chores" },
  { key: "moderate", label: "Moderate activity", hint: "breaking a light sweat" },
  { key: "vigorous", label: "Vigorous activity", hint: "breathing hard" },
];

export function renderAssessmentForm(
  onSubmit: (body: AssessmentBody) => void,
): HTMLElement {
  const card = el("section", "card");
  card.append(el("h2", undefined, "Your week right now"));
  card.append(
    el(
      "p",
      "muted",
      "For each kind of activity, how long at a time, and how many days a week?",
    ),
  );
  const form = el("form");
  const inputs = new Map<string, { minutes: HTMLInputElement; days: HTMLInputElement }>();
  for (const band of BANDS) {
    const row = el("div", "band-row");
    const label = el("label", undefined, band.label);
    label.append(el("small", "muted", ` — ${band.hint}`));
    const minutes = el("input");
    minutes.type = "number";
    minutes.min = "0";
    minutes.max = "600";
    minutes.value = "0";
    minutes.setAttribute("aria-label", `${band.label}: minutes per day`);
    const days = el("input");
    days.type = "number";
    days.min = "0";
    days.max = "7";
    days.value = "0";
    days.setAttribute("aria-label", `${band.label}: days per week`);
    const fields = el("div", "band-fields");
    fields.append(minutes, el("span", "muted", "min/day on"), days, el("span", "muted", "days"));
    row.append(label, fields);
    form.append(row);
    inputs.set(band.key, { minutes, days });
  }
  const button = el("button", "primary", "Continue");
  form.append(button);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const body: AssessmentBody = {};
    for (const band of BANDS) {
      const pair = inputs.get(band.key);
      if (!pair) continue;
      body[band.key] = {
        duration_min: Number(pair.minutes.value) || 0,
        frequency: Number(pair.days.value) || 0,
      };
    }
    onSubmit(body);
  });
  card.append(form);
  return card;
}

export function renderGoalMenu(
  choices: ChoicesJson,
  capability: number,
  projectedWeeksFor: (goal: GoalJson) => number,
  onPick: (goal: GoalJson) => void,
): HTMLElement {
  const card = el("section", "card");
  card.append(el("h2", undefined, "Pick your first week"));
  const intro =
    capability > 0
      ? `You're currently around ${volumeLabel(capability)} a week. These all cover that.`
      : "Starting fresh — pick whatever feels doable.";
  card.append(el("p", "muted", intro));
  const list = el("div", "goal-menu");
  for (const goal of choices.goals) {
    const button = el("button", "goal-option");
    button.append(el("strong", undefined, goalLabel(goal)));
    button.append(el("span", "muted", volumeLabel(goal.volume)));
    button.append(el("span", "projection", projectionLabel(projectedWeeksFor(goal))));
    button.addEventListener("click", () => onPick(goal));
    list.append(button);
  }
  card.append(list);
  return card;
}
