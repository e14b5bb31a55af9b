// Underline spans from checked text plus its labels: a pure function,
// re-runnable any number of times without side effects.

import { cpToUnits, sliceByCp } from "./offsets";
import type { WireLabel } from "./types";

export interface AnnotationSpan {
  /** display (UTF-16 unit) offsets into the text */
  start: number;
  end: number;
  tag: string;
  hint: string;
  suggestion: string | null;
  tokenIndex: number;
  surface: string;
}

export type AnnotationResult =
  | { kind: "ok"; spans: AnnotationSpan[] }
  | { kind: "stale"; reason: string };

/**
 * Build one underline span per flagged label.
 *
 * Every label's recorded surface must still match the text slice at its
 * offsets; any mismatch means the feedback belongs to an older buffer, and
 * the whole set is discarded rather than drawn in the wrong place.
 */
export function buildAnnotations(text: string, labels: WireLabel[]): AnnotationResult {
  const spans: AnnotationSpan[] = [];
  for (const label of labels) {
    let slice: string;
    try {
      slice = sliceByCp(text, label.start, label.end);
    } catch {
      return { kind: "stale", reason: `label ${label.token_index} offsets out of range` };
    }
    if (slice !== label.surface) {
      return { kind: "stale", reason: `label ${label.token_index} no longer matches the text` };
    }
    if (!label.flagged) continue;
    spans.push({
      start: cpToUnits(text, label.start),
      end: cpToUnits(text, label.end),
      tag: label.tag,
      hint: label.hint,
      suggestion: label.suggestion,
      tokenIndex: label.token_index,
      surface: label.surface,
    });
  }
  spans.sort((a, b) => a.start - b.start);
  for (let i = 1; i < spans.length; i += 1) {
    if (spans[i].start < spans[i - 1].end) {
      return { kind: "stale", reason: "overlapping labels" };
    }
  }
  return { kind: "ok", spans };
}

/** Text segments between and inside underlines, ready for display. */
export interface TextSegment {
  text: string;
  span: AnnotationSpan | null;
}

export function segmentText(text: string, spans: AnnotationSpan[]): TextSegment[] {
  const segments: TextSegment[] = [];
  let cursor = 0;
  for (const span of spans) {
    if (span.start > cursor) {
      segments.push({ text: text.slice(cursor, span.start), span: null });
    }
    segments.push({ text: text.slice(span.start, span.end), span });
    cursor = span.end;
  }
  if (cursor < text.length) {
    segments.push({ text: text.slice(cursor), span: null });
  }
  return segments;
}
