/** Rule labels shared with the engine's branch traces (keep in sync). */

export const RULE_LABELS = [
  "empty",
  "cv>=2",
  "chains-only",
  "loops-only",
  "no-3-chains",
  "one-3-chain-loops-only",
  "one-3-chain-big-chain",
  "multi-3-chains",
  "oracle",
] as const;

export type RuleLabel = (typeof RULE_LABELS)[number];

export function isKnownRule(rule: string): rule is RuleLabel {
  return (RULE_LABELS as readonly string[]).includes(rule);
}

/** Human blurb shown next to a rule label on the advice card. */
export function describeRule(rule: string): string {
  switch (rule) {
    case "empty":
      return "nothing left to play";
    case "cv>=2":
      return "controlled value decides the game";
    case "chains-only":
      return "chains only: open the smallest chain";
    case "loops-only":
      return "loops only: open the smallest loop";
    case "no-3-chains":
      return "no 3-chains: open the smallest loop";
    case "one-3-chain-loops-only":
      return "one 3-chain among loops";
    case "one-3-chain-big-chain":
      return "one 3-chain plus a long chain";
    case "multi-3-chains":
      return "several 3-chains";
    case "oracle":
      return "odd loops: exhaustive search";
    default:
      return "";
  }
}
