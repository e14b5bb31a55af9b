// The essay text buffer and the rules for touching it.
//
// Text changes arrive from exactly two places: the user's keystrokes and
// the user clicking "apply" on one suggestion. Feedback rendering reads the
// buffer, never writes it; there is no autocorrect path.

import { buildAnnotations, type AnnotationResult, type AnnotationSpan } from "./annotations";
import type { Feedback } from "./types";

export class EditorBuffer {
  private textValue = "";
  private dirtyValue = false;
  private feedbackValue: Feedback | null = null;
  private checkedText: string | null = null;

  get text(): string {
    return this.textValue;
  }

  /** True when the buffer changed since the last stored check. */
  get dirty(): boolean {
    return this.dirtyValue;
  }

  get lastFeedback(): Feedback | null {
    return this.feedbackValue;
  }

  /** The one write path for typing; called from the input event. */
  setFromKeystroke(text: string): void {
    if (text === this.textValue) return;
    this.textValue = text;
    this.dirtyValue = true;
  }

  /** Record a successful check of the current text. */
  storeFeedback(feedback: Feedback): void {
    this.feedbackValue = feedback;
    this.checkedText = this.textValue;
    this.dirtyValue = false;
  }

  /**
   * Underlines for the current buffer, or a stale notice.
   *
   * Pure with respect to the buffer: calling this any number of times
   * leaves the text identical.
   */
  renderFeedback(): AnnotationResult {
    if (this.feedbackValue === null) {
      return { kind: "ok", spans: [] };
    }
    if (this.dirtyValue || this.checkedText !== this.textValue) {
      return { kind: "stale", reason: "text changed since the last check" };
    }
    return buildAnnotations(this.textValue, this.feedbackValue.labels);
  }

  /**
   * Replace exactly one underlined token with its suggestion (user click).
   *
   * Everything before span.start and after span.end is preserved verbatim;
   * the edit marks the buffer dirty so old underlines stop rendering.
   */
  applySuggestion(span: AnnotationSpan): boolean {
    if (span.suggestion === null) return false;
    if (this.textValue.slice(span.start, span.end) !== span.surface) return false;
    this.textValue =
      this.textValue.slice(0, span.start) + span.suggestion + this.textValue.slice(span.end);
    this.dirtyValue = true;
    return true;
  }
}
