import { ApiClient, ApiError } from "./api.js";
import { Advisor, type WhatIfPreview } from "./advisor.js";
import {
  buildPosition,
  firstChipError,
  parseChipInput,
  type Chip,
} from "./position.js";
import { renderChips, renderSessionPanels } from "./render.js";

declare global {
  interface Window {
    LOONYEND_API?: string;
  }
}

const api = new ApiClient(window.LOONYEND_API ?? "");
const advisor = new Advisor(api);

const chips: Chip[] = [];
let preview: WhatIfPreview | null = null;

const builderEl = document.getElementById("builder")!;
const sessionEl = document.getElementById("session")!;
const toastEl = document.getElementById("toast")!;

function toast(message: string): void {
  toastEl.textContent = message;
  toastEl.classList.add("visible");
  setTimeout(() => toastEl.classList.remove("visible"), 4000);
}

function redrawBuilder(): void {
  builderEl.querySelector(".chips-host")!.innerHTML = renderChips(chips);
}

function redrawSession(): void {
  if (advisor.session !== null) {
    sessionEl.innerHTML =
      renderSessionPanels(advisor.session, preview) +
      '<div class="controls">' +
      '<button data-act="advice">play advised</button>' +
      '<button data-act="keep">keep control</button>' +
      '<button data-act="take">take all</button>' +
      "</div>";
  }
}

async function guarded(action: () => Promise<unknown>): Promise<void> {
  try {
    await action();
    preview = null;
  } catch (error) {
    // surface the failure without corrupting the view
    toast(error instanceof ApiError ? error.message : String(error));
  }
  redrawSession();
}

builderEl.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const remove = target.dataset.removeChip;
  if (remove !== undefined) {
    chips.splice(Number(remove), 1);
    redrawBuilder();
  }
});

document.getElementById("chip-add")!.addEventListener("click", () => {
  const input = document.getElementById("chip-input") as HTMLInputElement;
  const chip = parseChipInput(input.value);
  if (chip === null) {
    toast("enter a length, e.g. 4 or 6L");
    return;
  }
  chips.push(chip);
  input.value = "";
  redrawBuilder();
});

document.getElementById("start")!.addEventListener("click", () => {
  const problem = firstChipError(chips);
  if (problem !== null) {
    toast(problem);
    return;
  }
  const opener = (document.getElementById("opener") as HTMLSelectElement)
    .value as "A" | "B";
  void guarded(() => advisor.start(buildPosition(chips), opener));
});

sessionEl.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  switch (target.dataset.act) {
    case "advice":
      void guarded(() => advisor.applyAdvice());
      break;
    case "keep":
      void guarded(() => advisor.decide("KeepControl"));
      break;
    case "take":
      void guarded(() => advisor.decide("TakeAll"));
      break;
  }
  const what = target.dataset.whatifOpen;
  if (what !== undefined) {
    void advisor
      .whatIfOpen(what)
      .then((result) => {
        preview = result;
        redrawSession();
      })
      .catch(() => toast("preview unavailable"));
  }
});

redrawBuilder();
