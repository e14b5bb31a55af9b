// Wire shapes exactly as the REST service returns them.

export interface WireLabel {
  token_index: number;
  flagged: boolean;
  tag: string;
  suggestion: string | null;
  hint: string;
  confidence: number;
  // scalar (code point) offsets into the checked text, plus the exact slice
  start: number;
  end: number;
  surface: string;
}

export interface Feedback {
  labels: WireLabel[];
  corrected_text: string;
  cefr: string;
  config_id: string;
  error_count: number;
  word_count: number;
  below_minimum: boolean;
  backend_id: string;
  degraded: boolean;
}

export interface Submission {
  essay_id: string;
  revision_no: number;
  text: string;
  timestamp: string;
  feedback: Feedback;
}

export interface Prompt {
  id: string;
  level: string;
  topic: string;
  genre: string;
  body_ar: string;
  min_words: number;
  body_en: string | null;
  media_ref: string | null;
}

export interface UserRecord {
  user_id: string;
  locale: string;
  created_at: string;
  native_language?: string;
  dialect?: string;
  self_level?: string;
}

export interface EssayRecord {
  essay_id: string;
  user_id: string;
  prompt_id: string;
  created_at: string;
  revisions?: RevisionSummary[];
}

export interface RevisionSummary {
  revision_no: number;
  timestamp: string;
  error_count: number;
  cefr: string;
}

export interface ProgressPoint {
  revision_no: number;
  timestamp: string;
  error_count: number;
  cefr: string;
}

export interface ProgressResponse {
  essay_id: string;
  points: ProgressPoint[];
}

export type DiffOp = "equal" | "deleted" | "inserted";

export interface DiffRun {
  op: DiffOp;
  tokens: string[];
}

export interface DiffResponse {
  essay_id: string;
  from: number;
  to: number;
  ops: DiffRun[];
}
