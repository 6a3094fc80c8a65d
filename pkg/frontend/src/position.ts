/** Component chips and the position text they build.
 *
 * Mirrors the server grammar: a bare number is a chain, an "L" suffix a
 * loop, "k*" a multiplicity; the canonical string lists chains ascending,
 * then loops ascending. Validation messages match the server's so inline
 * errors and HTTP 400 details read the same.
 */

export interface Chip {
  length: number;
  loop: boolean;
}

export function chipToken(chip: Chip): string {
  return chip.loop ? `${chip.length}L` : `${chip.length}`;
}

/** Validation message for one chip, or null when the chip is legal. */
export function chipError(chip: Chip): string | null {
  if (!Number.isInteger(chip.length)) {
    return "length must be an integer";
  }
  if (!chip.loop && chip.length < 3) {
    return "chain length < 3";
  }
  if (chip.loop && chip.length < 4) {
    return "loop length < 4";
  }
  return null;
}

/** Parse user input such as "4", "6L" or "6l" into a chip. */
export function parseChipInput(text: string): Chip | null {
  const match = /^\s*(\d+)\s*([Ll])?\s*$/.exec(text);
  if (!match || match[1] === undefined) {
    return null;
  }
  return { length: parseInt(match[1], 10), loop: match[2] !== undefined };
}

/** True when some chip is an odd-length loop (engine falls back to search). */
export function hasOddLoop(chips: Chip[]): boolean {
  return chips.some((chip) => chip.loop && chip.length % 2 === 1);
}

/** Canonical position string for a set of chips. */
export function buildPosition(chips: Chip[]): string {
  const sorted = [...chips].sort((a, b) =>
    a.loop === b.loop ? a.length - b.length : a.loop ? 1 : -1,
  );
  const parts: string[] = [];
  let index = 0;
  while (index < sorted.length) {
    const chip = sorted[index]!;
    let count = 1;
    while (
      index + count < sorted.length &&
      sorted[index + count]!.loop === chip.loop &&
      sorted[index + count]!.length === chip.length
    ) {
      count += 1;
    }
    parts.push(count === 1 ? chipToken(chip) : `${count}*${chipToken(chip)}`);
    index += count;
  }
  return parts.join("+");
}

/** First validation problem among the chips, or null when all are legal. */
export function firstChipError(chips: Chip[]): string | null {
  for (const chip of chips) {
    const problem = chipError(chip);
    if (problem !== null) {
      return problem;
    }
  }
  return null;
}
