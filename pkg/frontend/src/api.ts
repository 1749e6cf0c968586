// Thin typed client over the coaching service's HTTP API.  Every dashboard
// interaction with the engine goes through this module and nothing else.

import type {
  AssessmentBody,
  AssessmentResponse,
  CloseWeekResponse,
  GoalChoiceResponse,
  GoalJson,
  HistoryResponse,
  ProposalAnswerResponse,
  ReportBody,
  ScheduleResponse,
  WeekJson,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
    this.name = "ApiError";
  }
}

type FetchLike = typeof fetch;

export class CoachApi {
  readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(base: string, fetchImpl: FetchLike = fetch) {
    this.base = base.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.base}${path}`, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const payload = (await response.json()) as { error?: string; detail?: string };
        detail = payload.error ?? payload.detail ?? detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("GET", "/health");
  }

  createTrainee(name: string): Promise<{ trainee_id: string; name: string }> {
    return this.request("POST", "/trainees", { name });
  }

  submitAssessment(traineeId: string, body: AssessmentBody): Promise<AssessmentResponse> {
    return this.request("POST", `/trainees/${traineeId}/assessment`, body);
  }

  chooseGoal(traineeId: string, goal: GoalJson): Promise<GoalChoiceResponse> {
    return this.request("POST", `/trainees/${traineeId}/goal-choice`, {
      exercise: goal.exercise,
      duration_min: goal.duration_min,
      frequency: goal.frequency,
    });
  }

  schedule(traineeId: string, today?: number): Promise<ScheduleResponse> {
    const query = today === undefined ? "" : `?today=${today}`;
    return this.request("GET", `/trainees/${traineeId}/schedule${query}`);
  }

  submitReport(traineeId: string, report: ReportBody): Promise<{ week: WeekJson }> {
    return this.request("POST", `/trainees/${traineeId}/reports`, report);
  }

  closeWeek(traineeId: string): Promise<CloseWeekResponse> {
    return this.request("POST", `/trainees/${traineeId}/close-week`, {});
  }

  answerProposal(
    traineeId: string,
    answer: "agree" | "disagree",
  ): Promise<ProposalAnswerResponse> {
    return this.request("POST", `/trainees/${traineeId}/proposal-response`, { answer });
  }

  history(traineeId: string): Promise<HistoryResponse> {
    return this.request("GET", `/trainees/${traineeId}/history`);
  }
}

/** API base resolution: ?api=… beats the saved choice beats same-host :8000. */
export function resolveApiBase(
  search: string,
  stored: string | null,
  locationOrigin: string,
): string {
  const fromQuery = new URLSearchParams(search).get("api");
  if (fromQuery) return fromQuery;
  if (stored) return stored;
  try {
    const url = new URL(locationOrigin);
    return `${url.protocol}//${url.hostname}:8000`;
  } catch {
    return "http://127.0.0.1:8000";
  }
}
