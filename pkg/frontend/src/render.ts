import { describeRule } from "./labels.js";
import type { Chip } from "./position.js";
import { chipError, chipToken, hasOddLoop } from "./position.js";
import type { Advice, SessionResponse } from "./types.js";
import type { WhatIfPreview } from "./advisor.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Editable chip list of the position builder, with inline validation. */
export function renderChips(chips: Chip[]): string {
  const items = chips
    .map((chip, index) => {
      const problem = chipError(chip);
      const classes = problem ? "chip chip-invalid" : "chip";
      const flag = problem ? `<span class="chip-error">${esc(problem)}</span>` : "";
      return (
        `<li class="${classes}" data-chip="${index}">` +
        `${esc(chipToken(chip))}${flag}` +
        `<button data-remove-chip="${index}" title="remove">×</button></li>`
      );
    })
    .join("");
  const badge = hasOddLoop(chips)
    ? '<span class="badge badge-oracle">odd loop: oracle mode</span>'
    : "";
  return `<ul class="chip-list">${items}</ul>${badge}`;
}

export function renderPhaseBanner(state: SessionResponse): string {
  if (state.terminal) {
    return '<div class="banner banner-terminal">game over</div>';
  }
  const text =
    state.phase === "DefenderToOpen"
      ? `${state.toAct} to open a component`
      : `${state.toAct} to decide on the opened ${state.opened ?? ""}`;
  return `<div class="banner">${esc(text)}</div>`;
}

export function renderScores(state: SessionResponse): string {
  return (
    '<div class="scores">' +
    `<span class="score">A: ${state.scoreA}</span>` +
    `<span class="score">B: ${state.scoreB}</span>` +
    `<span class="score score-left">left: ${esc(state.position) || "none"}</span>` +
    "</div>"
  );
}

/** Advice card; the rule label is the engine's branch-trace vocabulary. */
export function renderAdviceCard(advice: Advice, oracleFallback: boolean): string {
  if (advice === null) {
    return '<div class="advice advice-none">no advice: game over</div>';
  }
  const fallback = oracleFallback
    ? ' <span class="badge badge-oracle">odd loop: oracle mode</span>'
    : "";
  if (advice.kind === "open") {
    return (
      '<div class="advice">' +
      `<strong>open ${esc(advice.component)}</strong>` +
      ` <span class="rule" data-rule="${esc(advice.rule)}">${esc(advice.rule)}</span>` +
      ` <span class="rule-hint">${esc(describeRule(advice.rule))}</span>` +
      ` <span class="advice-value">value ${advice.moveValue}</span>` +
      fallback +
      "</div>"
    );
  }
  const label = advice.choice === "KeepControl" ? "keep control" : "take all";
  const tied = advice.indifferent
    ? ' <span class="badge badge-tie">either is optimal</span>'
    : "";
  return `<div class="advice"><strong>${label}</strong>${tied}${fallback}</div>`;
}

export function renderHistory(state: SessionResponse): string {
  let scoreA = 0;
  let scoreB = 0;
  const rows = state.history
    .map((entry) => {
      scoreA += entry.scoreADelta;
      scoreB += entry.scoreBDelta;
      return (
        `<li><span class="actor">${entry.actor}</span> ` +
        `${esc(entry.action)} <span class="running">(${scoreA}-${scoreB})</span></li>`
      );
    })
    .join("");
  return `<ol class="history">${rows}</ol>`;
}

export function renderWhatIf(preview: WhatIfPreview | null, terminal: boolean): string {
  if (terminal) {
    return '<div class="whatif whatif-disabled">what-if unavailable: game over</div>';
  }
  if (preview === null) {
    return '<div class="whatif whatif-empty">pick an action to preview</div>';
  }
  const note = preview.note ? ` <em>${esc(preview.note)}</em>` : "";
  return (
    '<div class="whatif">' +
    `<span>${esc(preview.action)}</span>: ` +
    `margin ${preview.previewValue} vs advised ${preview.advisedValue} ` +
    `<span class="delta">(delta ${preview.delta})</span>${note}` +
    "</div>"
  );
}

/** Whole-panel composition for the session view. */
export function renderSessionPanels(
  state: SessionResponse,
  preview: WhatIfPreview | null,
): string {
  return (
    renderPhaseBanner(state) +
    renderScores(state) +
    renderAdviceCard(state.advice, state.oracleFallback === true) +
    renderHistory(state) +
    renderWhatIf(preview, state.terminal)
  );
}
