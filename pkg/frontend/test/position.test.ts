import { describe, expect, it } from "vitest";

import {
  buildPosition,
  chipError,
  firstChipError,
  hasOddLoop,
  parseChipInput,
  type Chip,
} from "../src/position.js";

const chain = (length: number): Chip => ({ length, loop: false });
const loop = (length: number): Chip => ({ length, loop: true });

describe("buildPosition", () => {
  it("collapses duplicates and sorts chains before loops", () => {
    expect(buildPosition([chain(3), chain(3), chain(4), loop(6)])).toBe("2*3+4+6L");
  });

  it("matches the server grammar regardless of chip order", () => {
    expect(buildPosition([loop(6), chain(4), chain(3), chain(3)])).toBe("2*3+4+6L");
  });

  it("handles the empty board", () => {
    expect(buildPosition([])).toBe("");
  });

  it("keeps odd loops representable", () => {
    expect(buildPosition([chain(4), loop(7), loop(7)])).toBe("4+2*7L");
  });
});

describe("chip validation", () => {
  it("flags short chains with the server message", () => {
    expect(chipError(chain(2))).toBe("chain length < 3");
    expect(chipError(chain(3))).toBeNull();
  });

  it("flags short loops with the server message", () => {
    expect(chipError(loop(3))).toBe("loop length < 4");
    expect(chipError(loop(4))).toBeNull();
  });

  it("reports the first problem among many chips", () => {
    expect(firstChipError([chain(3), loop(3), chain(2)])).toBe("loop length < 4");
    expect(firstChipError([chain(5), loop(8)])).toBeNull();
  });
});

describe("parseChipInput", () => {
  it("accepts bare numbers and L suffixes", () => {
    expect(parseChipInput("4")).toEqual(chain(4));
    expect(parseChipInput("6L")).toEqual(loop(6));
    expect(parseChipInput(" 6 l ")).toEqual(loop(6));
  });

  it("rejects junk", () => {
    expect(parseChipInput("")).toBeNull();
    expect(parseChipInput("L")).toBeNull();
    expect(parseChipInput("4x")).toBeNull();
  });
});

describe("odd-loop detection", () => {
  it("drives the oracle-mode badge", () => {
    expect(hasOddLoop([chain(4), loop(7), loop(7)])).toBe(true);
    expect(hasOddLoop([chain(3), loop(6)])).toBe(false);
  });
});
