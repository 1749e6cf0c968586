// Wire types for the coaching service API, field-for-field.

export type ExerciseName = "moderate" | "interval_a" | "interval_b" | "brisk";

export type DayKind = "session" | "rest";

export type ReportStatus = "done" | "almost" | "nope";

export type MissReason =
  | "forgot"
  | "no_time"
  | "dont_enjoy"
  | "not_useful"
  | "too_hard";

export type Revision = "none" | "regress" | "progress" | "shift";

export type Direction = "increase" | "decrease" | "stay";

export type Phase = "new" | "assessed" | "active" | "maintaining";

export interface GoalJson {
  exercise: ExerciseName;
  duration_min: number;
  frequency: number;
  met: number;
  volume: number;
  description: string;
}

export interface ChoicesJson {
  exercise: ExerciseName;
  frequency: number;
  durations: number[];
  goals: GoalJson[];
}

export interface ModelJson {
  start: number;
  ceiling: number;
  span: number;
  offset: number;
}

export interface DayJson {
  day_index: number;
  kind: DayKind;
  status: ReportStatus | null;
}

export interface DayViewJson extends DayJson {
  week_index: number;
}

export interface WeekJson {
  week_index: number;
  goal: GoalJson;
  days: DayJson[];
  done_count: number;
}

export interface WeekRecordJson {
  week_index: number;
  goal: GoalJson;
  goal_volume: number;
  performed_volume: number;
  mean_rpe: number | null;
  completion: number;
  done_count: number;
  scheduled: number;
  reasons: MissReason[];
  revision: Revision;
}

export interface ProposalJson {
  week_index: number;
  goal: GoalJson;
  direction: Direction;
  previous_goal: GoalJson;
}

export interface BandAnswer {
  duration_min: number;
  frequency: number;
}

export interface AssessmentBody {
  light?: BandAnswer;
  moderate?: BandAnswer;
  vigorous?: BandAnswer;
}

export interface AssessmentResponse {
  capability: number;
  choices: ChoicesJson;
}

export interface GoalChoiceResponse {
  model: ModelJson & { projected_weeks: number };
  committed_goal: GoalJson;
  week: WeekJson;
}

export interface ScheduleResponse {
  week_index: number;
  today_index: number;
  goal: GoalJson;
  days: DayViewJson[];
  done_count: number;
  pending_proposal: ProposalJson | null;
}

export interface ReportBody {
  week_index: number;
  day_index: number;
  status: ReportStatus;
  rpe?: number;
  reason?: MissReason;
}

export interface CloseWeekResponse {
  closed_week: WeekRecordJson;
  revision: Revision;
  proposal: ProposalJson;
  auto_committed: boolean;
  week: WeekJson | null;
}

export interface ProposalAnswerResponse {
  committed_goal: GoalJson;
  week: WeekJson;
}

export interface HistoryResponse {
  trainee_id: string;
  name: string;
  phase: Phase;
  target_volume: number;
  weeks: WeekRecordJson[];
  model: ModelJson | null;
  choices: ChoicesJson | null;
  current_week: WeekJson | null;
  capability: number | null;
  pending_proposal: ProposalJson | null;
}
