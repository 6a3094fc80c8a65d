/** Wire types of the analysis service. */

export interface AnalyzeResponse {
  position: string;
  value: number;
  cv: number;
  fcv: number;
  tb: number;
  advisedOpen: string | null;
  rule: string | null;
  trace: string[];
  oracleFallback?: boolean;
  /** Present when the request carried an "open" token. */
  moveValue?: number;
}

export type PhaseName = "DefenderToOpen" | "ControllerToDecide";
export type PlayerName = "A" | "B";
export type ChoiceName = "KeepControl" | "TakeAll";

export interface OpenAdvice {
  kind: "open";
  component: string;
  moveValue: number;
  rule: string;
}

export interface DecisionAdvice {
  kind: "decision";
  choice: ChoiceName;
  indifferent: boolean;
}

export type Advice = OpenAdvice | DecisionAdvice | null;

export interface HistoryEntry {
  actor: PlayerName;
  action: string;
  scoreADelta: number;
  scoreBDelta: number;
}

export interface SessionResponse {
  id: string;
  phase: PhaseName;
  position: string;
  remaining: string[];
  opened: string | null;
  scoreA: number;
  scoreB: number;
  toAct: PlayerName;
  terminal: boolean;
  totalBoxes: number;
  history: HistoryEntry[];
  advice: Advice;
  oracleFallback?: boolean;
}

export interface ApiErrorBody {
  error: string;
  detail: string;
}
