// Screen-per-phase shell: the server's history endpoint decides what to show.

import { ApiError, CoachApi, resolveApiBase } from "./api.js";
import { projectedWeeks } from "./format.js";
import type { HistoryResponse, ReportBody } from "./types.js";
import { renderAssessmentForm, renderGoalMenu, renderNameForm } from "./views/onboarding.js";
import { renderReportForm, renderScheduleStrip } from "./views/schedule.js";
import { renderClosedWeekSummary, renderProposal } from "./views/negotiation.js";
import { renderHistory } from "./views/history.js";

const TRAINEE_KEY = "walkcoach.trainee";
const API_KEY = "walkcoach.api";

function readStored(key: string): string | null {
  try {
    return localStorage.getItem(key);
  } catch {
    return null;
  }
}

function writeStored(key: string, value: string | null): void {
  try {
    if (value === null) localStorage.removeItem(key);
    else localStorage.setItem(key, value);
  } catch {
    // storage unavailable (private window, blocked site data) — stay stateless
  }
}

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

export class Dashboard {
  readonly api: CoachApi;
  private readonly root: HTMLElement;
  private traineeId: string | null;
  private lastError: string | null = null;

  constructor(root: HTMLElement, api: CoachApi, traineeId: string | null = null) {
    this.root = root;
    this.api = api;
    this.traineeId = traineeId;
  }

  /** Re-render from the server's view of the trainee. */
  async refresh(): Promise<void> {
    if (!this.traineeId) {
      this.show(this.nameScreen());
      return;
    }
    try {
      const history = await this.api.history(this.traineeId);
      await this.renderPhase(history);
      this.lastError = null;
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        // the saved id no longer exists on this server — start over
        this.setTrainee(null);
        this.show(this.nameScreen());
        return;
      }
      this.show(this.errorCard(err));
    }
  }

  private setTrainee(traineeId: string | null): void {
    this.traineeId = traineeId;
    writeStored(TRAINEE_KEY, traineeId);
  }

  private show(...nodes: HTMLElement[]): void {
    const children: HTMLElement[] = [];
    if (this.lastError) {
      children.push(el("div", "banner error", this.lastError));
      this.lastError = null;
    }
    children.push(...nodes);
    this.root.replaceChildren(...children);
  }

  private async act(action: () => Promise<unknown>): Promise<void> {
    try {
      await action();
    } catch (err) {
      this.lastError = err instanceof ApiError ? err.detail : String(err);
    }
    await this.refresh();
  }

  private nameScreen(): HTMLElement {
    return renderNameForm((name) => {
      void this.act(async () => {
        const created = await this.api.createTrainee(name);
        this.setTrainee(created.trainee_id);
      });
    });
  }

  private header(history: HistoryResponse): HTMLElement {
    const bar = el("header", "topbar");
    bar.append(el("h1", undefined, "Walking coach"));
    const who = el("div", "whoami");
    if (history.name) who.append(el("span", undefined, history.name));
    const switchLink = el("button", "linklike", "switch person");
    switchLink.addEventListener("click", () => {
      this.setTrainee(null);
      void this.refresh();
    });
    who.append(switchLink);
    bar.append(who);
    return bar;
  }

  private async renderPhase(history: HistoryResponse): Promise<void> {
    switch (history.phase) {
      case "new":
        this.show(
          this.header(history),
          renderAssessmentForm((body) => {
            void this.act(() => this.api.submitAssessment(this.traineeId!, body));
          }),
        );
        return;
      case "assessed": {
        const capability = history.capability ?? 0;
        const choices = history.choices;
        if (!choices) throw new Error("assessed trainee with no menu");
        this.show(
          this.header(history),
          renderGoalMenu(
            choices,
            capability,
            (goal) => projectedWeeks(capability, goal.volume, history.target_volume),
            (goal) => {
              void this.act(() => this.api.chooseGoal(this.traineeId!, goal));
            },
          ),
        );
        return;
      }
      default:
        await this.renderWeek(history);
    }
  }

  private async renderWeek(history: HistoryResponse): Promise<void> {
    const schedule = await this.api.schedule(this.traineeId!);
    const parts: HTMLElement[] = [this.header(history)];
    if (history.phase === "maintaining") {
      parts.push(el("div", "banner steady", "You're at the weekly target — holding it here."));
    }
    if (schedule.pending_proposal) {
      const closed = history.weeks[history.weeks.length - 1];
      if (closed) parts.push(renderClosedWeekSummary(closed));
      parts.push(
        renderProposal(schedule.pending_proposal, (answer) => {
          void this.act(() => this.api.answerProposal(this.traineeId!, answer));
        }),
      );
    } else {
      parts.push(renderScheduleStrip(schedule));
      const reportable = schedule.days
        .filter(
          (day) =>
            day.week_index === schedule.week_index &&
            day.kind === "session" &&
            day.status === null,
        )
        .map((day) => day.day_index);
      parts.push(
        renderReportForm(schedule.goal, schedule.week_index, reportable, {
          onSubmit: (report: ReportBody) => {
            void this.act(() => this.api.submitReport(this.traineeId!, report));
          },
          onCloseWeek: () => {
            void this.act(() => this.api.closeWeek(this.traineeId!));
          },
        }),
      );
    }
    parts.push(renderHistory(history.weeks));
    this.show(...parts);
  }

  private errorCard(err: unknown): HTMLElement {
    const card = el("section", "card error");
    card.append(el("h2", undefined, "Can't reach the coach"));
    const detail = err instanceof Error ? err.message : String(err);
    card.append(el("p", "muted", detail));
    const retry = el("button", "primary", "Try again");
    retry.addEventListener("click", () => void this.refresh());
    card.append(retry);
    return card;
  }
}

/** Wire the dashboard into a page; index.html calls this with its #app node. */
export async function boot(root: HTMLElement): Promise<Dashboard> {
  const base = resolveApiBase(window.location.search, readStored(API_KEY), window.location.origin);
  writeStored(API_KEY, base);
  const dashboard = new Dashboard(root, new CoachApi(base), readStored(TRAINEE_KEY));
  await dashboard.refresh();
  return dashboard;
}
