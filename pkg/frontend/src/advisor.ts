import { ApiClient } from "./api.js";
import type {
  Advice,
  ChoiceName,
  OpenAdvice,
  SessionResponse,
} from "./types.js";

export interface WhatIfPreview {
  /** Human description of the hypothetical action. */
  action: string;
  /** Value of the game if the hypothetical action is played. */
  previewValue: number;
  /** Value of the advised action, for comparison. */
  advisedValue: number;
  /** previewValue - advisedValue; 0 means the action is equally optimal. */
  delta: number;
  note: string | null;
}

function sacrificeFor(component: string): number {
  return component.toUpperCase().endsWith("L") ? 4 : 2;
}

/** Session controller: every view is a pure projection of the last server
 * response; what-ifs go through /analyze and never touch the session. */
export class Advisor {
  session: SessionResponse | null = null;

  constructor(private readonly api: ApiClient) {}

  private get current(): SessionResponse {
    if (this.session === null) {
      throw new Error("no active session");
    }
    return this.session;
  }

  async start(position: string, opener: "A" | "B"): Promise<SessionResponse> {
    this.session = await this.api.createSession(position, opener);
    return this.session;
  }

  /** Re-fetch the session; reconstructs the identical view. */
  async refresh(): Promise<SessionResponse> {
    this.session = await this.api.getSession(this.current.id);
    return this.session;
  }

  async open(component: string): Promise<SessionResponse> {
    this.session = await this.api.openComponent(this.current.id, component);
    return this.session;
  }

  async decide(choice: ChoiceName): Promise<SessionResponse> {
    this.session = await this.api.decide(this.current.id, choice);
    return this.session;
  }

  /** Play the advised action, whichever kind it is. */
  async applyAdvice(): Promise<SessionResponse> {
    const advice = this.current.advice;
    if (advice === null) {
      throw new Error("game is over");
    }
    return advice.kind === "open"
      ? this.open(advice.component)
      : this.decide(advice.choice);
  }

  get advice(): Advice {
    return this.current.advice;
  }

  /** Margin preview for opening `component` instead of the advised one. */
  async whatIfOpen(component: string): Promise<WhatIfPreview> {
    const state = this.current;
    if (state.phase !== "DefenderToOpen" || state.advice?.kind !== "open") {
      throw new Error("no open to preview in this phase");
    }
    const advised: OpenAdvice = state.advice;
    const analysis = await this.api.analyze(state.position, component);
    const previewValue = analysis.moveValue ?? NaN;
    const delta = previewValue - advised.moveValue;
    return {
      action: `open ${component}`,
      previewValue,
      advisedValue: advised.moveValue,
      delta,
      note: delta === 0 ? "either is optimal" : null,
    };
  }

  /** Margin preview for replying with `choice` instead of the advice. */
  async whatIfDecision(choice: ChoiceName): Promise<WhatIfPreview> {
    const state = this.current;
    if (state.phase !== "ControllerToDecide" || state.advice?.kind !== "decision") {
      throw new Error("no decision to preview in this phase");
    }
    const advice = state.advice;
    const analysis = await this.api.analyze(state.position);
    const sacrifice = sacrificeFor(state.opened ?? "");
    // Keeping control nets (rest - sacrifice) more than taking everything;
    // the advised choice is the max of the two.
    const swing = 2 * Math.abs(analysis.value - sacrifice);
    const delta = advice.indifferent || choice === advice.choice ? 0 : -swing;
    return {
      action: choice,
      previewValue: delta,
      advisedValue: 0,
      delta,
      note: delta === 0 ? "either is optimal" : null,
    };
  }
}
