// The coach's next-week proposal: take it, or keep this week's goal.

import type { ProposalJson, WeekRecordJson } from "../types.js";
import { directionLabel, goalLabel, volumeLabel } from "../format.js";

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

const REVISION_NOTES: Record<WeekRecordJson["revision"], string> = {
  none: "That week went to plan.",
  regress: "That week asked too much, so the plan is easing off.",
  progress: "That week was comfortably done — the climb can go a bit faster.",
  shift: "Life got in the way; the plan slides a week without getting harder.",
};

export function renderClosedWeekSummary(record: WeekRecordJson): HTMLElement {
  const card = el("section", "card");
  card.append(el("h2", undefined, `Week ${record.week_index} wrapped up`));
  card.append(
    el(
      "p",
      undefined,
      `${record.done_count} of ${record.scheduled} sessions — ` +
        `${volumeLabel(record.performed_volume)} of ${volumeLabel(record.goal_volume)} planned.`,
    ),
  );
  card.append(el("p", "muted", REVISION_NOTES[record.revision]));
  return card;
}

export function renderProposal(
  proposal: ProposalJson,
  onAnswer: (answer: "agree" | "disagree") => void,
): HTMLElement {
  const card = el("section", "card proposal");
  card.append(el("h2", undefined, `Week ${proposal.week_index}: ${directionLabel(proposal.direction)}`));
  const compare = el("div", "proposal-compare");
  const next = el("div", "proposal-next");
  next.append(el("span", "muted", "Suggested"));
  next.append(el("strong", undefined, goalLabel(proposal.goal)));
  next.append(el("span", undefined, volumeLabel(proposal.goal.volume)));
  const previous = el("div", "proposal-previous");
  previous.append(el("span", "muted", "Last week"));
  previous.append(el("strong", undefined, goalLabel(proposal.previous_goal)));
  previous.append(el("span", undefined, volumeLabel(proposal.previous_goal.volume)));
  compare.append(next, previous);
  card.append(compare);
  const actions = el("div", "actions");
  const agree = el("button", "primary", "Sounds good");
  agree.addEventListener("click", () => onAnswer("agree"));
  const disagree = el("button", "secondary", "Keep last week's goal");
  disagree.addEventListener("click", () => onAnswer("disagree"));
  actions.append(agree, disagree);
  card.append(actions);
  card.append(
    el(
      "p",
      "muted",
      "Pushing back keeps the goal where it was and gives the plan an extra week.",
    ),
  );
  return card;
}
