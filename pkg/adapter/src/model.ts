/** Corpus record shapes shared with the linter's JSONL schema. */

export interface Token {
  text: string;
  lemma: string;
  pos: string;
  index: number;
}

export type MarkKind = "line_break" | "bullet";

export interface LayoutMark {
  kind: MarkKind;
  before_token: number;
}

export interface AnnotatedRequirement {
  id: string;
  text: string;
  tokens: Token[];
  tree: string | null;
  marks: LayoutMark[];
}

export interface RawRequirement {
  id: string;
  text: string;
}

export class ValidationError extends Error {}
