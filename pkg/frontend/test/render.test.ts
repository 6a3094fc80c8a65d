import { describe, expect, it } from "vitest";

import {
  renderAdviceCard,
  renderChips,
  renderHistory,
  renderPhaseBanner,
  renderWhatIf,
} from "../src/render.js";
import type { SessionResponse } from "../src/types.js";

const baseSession: SessionResponse = {
  id: "s1",
  phase: "DefenderToOpen",
  position: "2*3+4+6L",
  remaining: ["3", "3#2", "4", "6L"],
  opened: null,
  scoreA: 0,
  scoreB: 0,
  toAct: "A",
  terminal: false,
  totalBoxes: 16,
  history: [],
  advice: { kind: "open", component: "3", moveValue: 2, rule: "multi-3-chains" },
};

describe("renderAdviceCard", () => {
  it("shows the component and the rule label verbatim", () => {
    const html = renderAdviceCard(baseSession.advice, false);
    expect(html).toContain("open 3");
    expect(html).toContain('data-rule="multi-3-chains"');
  });

  it("marks indifferent decisions", () => {
    const html = renderAdviceCard(
      { kind: "decision", choice: "KeepControl", indifferent: true },
      false,
    );
    expect(html).toContain("keep control");
    expect(html).toContain("either is optimal");
  });

  it("shows the oracle badge on odd-loop sessions", () => {
    const html = renderAdviceCard(
      { kind: "open", component: "7L", moveValue: 4, rule: "oracle" },
      true,
    );
    expect(html).toContain("odd loop: oracle mode");
  });

  it("handles terminal sessions", () => {
    expect(renderAdviceCard(null, false)).toContain("game over");
  });
});

describe("renderPhaseBanner", () => {
  it("names the actor and phase", () => {
    expect(renderPhaseBanner(baseSession)).toContain("A to open");
    expect(
      renderPhaseBanner({
        ...baseSession,
        phase: "ControllerToDecide",
        opened: "3",
        toAct: "B",
      }),
    ).toContain("B to decide on the opened 3");
  });
});

describe("renderHistory", () => {
  it("shows running scores", () => {
    const html = renderHistory({
      ...baseSession,
      history: [
        { actor: "A", action: "open 3", scoreADelta: 0, scoreBDelta: 0 },
        { actor: "B", action: "take-all", scoreADelta: 0, scoreBDelta: 3 },
      ],
    });
    expect(html).toContain("open 3");
    expect(html).toContain("(0-3)");
  });
});

describe("renderWhatIf", () => {
  it("is disabled on terminal states", () => {
    expect(renderWhatIf(null, true)).toContain("unavailable");
  });

  it("shows margins and delta", () => {
    const html = renderWhatIf(
      {
        action: "open 6L",
        previewValue: 3,
        advisedValue: 1,
        delta: 2,
        note: null,
      },
      false,
    );
    expect(html).toContain("margin 3 vs advised 1");
    expect(html).toContain("delta 2");
  });
});

describe("renderChips", () => {
  it("flags invalid chips inline and badges odd loops", () => {
    const html = renderChips([
      { length: 2, loop: false },
      { length: 7, loop: true },
    ]);
    expect(html).toContain("chain length &lt; 3");
    expect(html).toContain("odd loop: oracle mode");
  });
});
