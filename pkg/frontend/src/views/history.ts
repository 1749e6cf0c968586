// Past weeks as goal-vs-performed bars against the weekly target.

import type { WeekRecordJson } from "../types.js";
import { goalLabel, percentOfTarget, volumeLabel } from "../format.js";

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

const REVISION_BADGES: Record<WeekRecordJson["revision"], string | null> = {
  none: null,
  regress: "eased off",
  progress: "sped up",
  shift: "slid a week",
};

function bar(className: string, volume: number): HTMLElement {
  const track = el("div", "bar-track");
  const fill = el("div", `bar-fill ${className}`);
  fill.style.width = `${percentOfTarget(volume)}%`;
  track.append(fill);
  return track;
}

export function renderHistory(records: readonly WeekRecordJson[]): HTMLElement {
  const card = el("section", "card history");
  card.append(el("h2", undefined, "How it's gone"));
  if (records.length === 0) {
    card.append(el("p", "muted", "No finished weeks yet — close your first week to see it here."));
    return card;
  }
  const list = el("ol", "history-list");
  for (const record of records) {
    const item = el("li", "history-week");
    item.dataset["week"] = String(record.week_index);
    const head = el("div", "history-head");
    head.append(el("strong", undefined, `Week ${record.week_index}`));
    head.append(el("span", "muted", goalLabel(record.goal)));
    const badge = REVISION_BADGES[record.revision];
    if (badge) head.append(el("span", `badge badge-${record.revision}`, badge));
    item.append(head);
    item.append(bar("bar-goal", record.goal_volume));
    item.append(bar("bar-performed", record.performed_volume));
    item.append(
      el(
        "span",
        "muted history-numbers",
        `${volumeLabel(record.performed_volume)} done of ${volumeLabel(record.goal_volume)} planned`,
      ),
    );
    list.append(item);
  }
  card.append(list);
  return card;
}
