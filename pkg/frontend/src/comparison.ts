// Before/after panes from a word-level diff: deletions struck on the left,
// insertions highlighted on the right, equal runs shared by both.

import type { DiffRun } from "./types";

export interface PaneSegment {
  text: string;
  kind: "plain" | "struck" | "highlight";
}

export interface ComparisonModel {
  before: PaneSegment[];
  after: PaneSegment[];
  changed: boolean;
}

export function buildComparison(ops: DiffRun[]): ComparisonModel {
  const before: PaneSegment[] = [];
  const after: PaneSegment[] = [];
  let changed = false;
  for (const run of ops) {
    if (run.tokens.length === 0) continue;
    const text = run.tokens.join(" ");
    if (run.op === "equal") {
      before.push({ text, kind: "plain" });
      after.push({ text, kind: "plain" });
    } else if (run.op === "deleted") {
      before.push({ text, kind: "struck" });
      changed = true;
    } else {
      after.push({ text, kind: "highlight" });
      changed = true;
    }
  }
  return { before, after, changed };
}
