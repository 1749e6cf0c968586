// @vitest-environment happy-dom

import { beforeEach, describe, expect, it } from "vitest";

import { ApiError, CoachApi } from "../src/api.js";
import { Dashboard } from "../src/app.js";
import type {
  GoalJson,
  HistoryResponse,
  ScheduleResponse,
} from "../src/types.js";

function goal(duration: number, frequency: number): GoalJson {
  return {
    exercise: "moderate",
    duration_min: duration,
    frequency,
    met: 3.0,
    volume: 3.0 * duration * frequency,
    description: "",
  };
}

const EASY_10_3 = goal(10, 3);

function baseHistory(): HistoryResponse {
  return {
    trainee_id: "t1",
    name: "Ada",
    phase: "new",
    target_volume: 750,
    weeks: [],
    model: null,
    choices: null,
    current_week: null,
    capability: null,
    pending_proposal: null,
  };
}

function activeSchedule(): ScheduleResponse {
  return {
    week_index: 1,
    today_index: 0,
    goal: EASY_10_3,
    days: [
      { week_index: 1, day_index: 0, kind: "rest", status: null },
      { week_index: 1, day_index: 1, kind: "session", status: null },
      { week_index: 1, day_index: 2, kind: "rest", status: null },
      { week_index: 1, day_index: 3, kind: "session", status: null },
      { week_index: 1, day_index: 4, kind: "rest", status: null },
      { week_index: 1, day_index: 5, kind: "session", status: null },
      { week_index: 1, day_index: 6, kind: "rest", status: null },
    ],
    done_count: 0,
    pending_proposal: null,
  };
}

/** CoachApi stand-in: canned answers plus a call log. */
class StubApi {
  calls: string[] = [];
  historyResponse: HistoryResponse = baseHistory();
  scheduleResponse: ScheduleResponse = activeSchedule();

  async history(id: string): Promise<HistoryResponse> {
    this.calls.push(`history ${id}`);
    return this.historyResponse;
  }

  async schedule(id: string): Promise<ScheduleResponse> {
    this.calls.push(`schedule ${id}`);
    return this.scheduleResponse;
  }

  async createTrainee(name: string): Promise<{ trainee_id: string; name: string }> {
    this.calls.push(`create ${name}`);
    return { trainee_id: "t1", name };
  }

  async submitAssessment(): Promise<never> {
    throw new Error("not in this test");
  }

  async answerProposal(id: string, answer: string): Promise<object> {
    this.calls.push(`answer ${answer}`);
    return {};
  }
}

function mount(stub: StubApi, traineeId: string | null = "t1"): { root: HTMLElement; dash: Dashboard } {
  const root = document.createElement("main");
  document.body.append(root);
  const dash = new Dashboard(root, stub as unknown as CoachApi, traineeId);
  return { root, dash };
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("Dashboard", () => {
  it("asks for a name when nobody is signed in", async () => {
    const { root, dash } = mount(new StubApi(), null);
    await dash.refresh();
    expect(root.textContent).toContain("What should we call you?");
  });

  it("shows the questionnaire for a brand-new trainee", async () => {
    const stub = new StubApi();
    const { root, dash } = mount(stub);
    await dash.refresh();
    expect(root.textContent).toContain("Your week right now");
    expect(stub.calls).toEqual(["history t1"]);
  });

  it("shows the goal menu once assessed", async () => {
    const stub = new StubApi();
    stub.historyResponse = {
      ...baseHistory(),
      phase: "assessed",
      capability: 0,
      choices: { exercise: "moderate", frequency: 3, durations: [10], goals: [EASY_10_3] },
    };
    const { root, dash } = mount(stub);
    await dash.refresh();
    expect(root.textContent).toContain("Pick your first week");
    expect(root.querySelectorAll("button.goal-option").length).toBe(1);
    expect(root.textContent).toContain("about 8 weeks to your target");
  });

  it("shows the week strip and report form while active", async () => {
    const stub = new StubApi();
    stub.historyResponse = { ...baseHistory(), phase: "active" };
    const { root, dash } = mount(stub);
    await dash.refresh();
    expect(root.textContent).toContain("Week 1");
    expect(root.textContent).toContain("How did it go?");
    expect(root.textContent).toContain("No finished weeks yet");
    expect(stub.calls).toEqual(["history t1", "schedule t1"]);
  });

  it("swaps the report form for the proposal after a close", async () => {
    const stub = new StubApi();
    stub.historyResponse = {
      ...baseHistory(),
      phase: "active",
      weeks: [
        {
          week_index: 1,
          goal: EASY_10_3,
          goal_volume: 90,
          performed_volume: 90,
          mean_rpe: 3,
          completion: 1,
          done_count: 3,
          scheduled: 3,
          reasons: [],
          revision: "none",
        },
      ],
    };
    stub.scheduleResponse = {
      ...activeSchedule(),
      pending_proposal: {
        week_index: 2,
        goal: goal(15, 4),
        direction: "increase",
        previous_goal: EASY_10_3,
      },
    };
    const { root, dash } = mount(stub);
    await dash.refresh();
    expect(root.textContent).toContain("Week 1 wrapped up");
    expect(root.textContent).toContain("a step up");
    expect(root.textContent).not.toContain("How did it go?");
    root.querySelector<HTMLButtonElement>(".proposal button.primary")?.click();
    await new Promise((resolve) => setTimeout(resolve, 0));
    expect(stub.calls).toContain("answer agree");
  });

  it("flags the target once maintenance starts", async () => {
    const stub = new StubApi();
    stub.historyResponse = { ...baseHistory(), phase: "maintaining" };
    const { root, dash } = mount(stub);
    await dash.refresh();
    expect(root.textContent).toContain("at the weekly target");
  });

  it("starts over when the saved trainee is gone", async () => {
    const stub = new StubApi();
    stub.history = async () => {
      throw new ApiError(404, "unknown trainee");
    };
    const { root, dash } = mount(stub);
    await dash.refresh();
    expect(root.textContent).toContain("What should we call you?");
  });

  it("surfaces a dead service with a retry", async () => {
    const stub = new StubApi();
    stub.history = async () => {
      throw new TypeError("fetch failed");
    };
    const { root, dash } = mount(stub);
    await dash.refresh();
    expect(root.textContent).toContain("Can't reach the coach");
  });
});
