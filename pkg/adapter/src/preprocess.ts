/** Text cleanup ahead of tagging: quotation marks confuse constituency
 * parsers, so they are removed; line breaks and leading bullet glyphs
 * become layout marks anchored to the token that follows them. */

import { LayoutMark } from "./model.js";
import { tokenize } from "./tokenize.js";

const QUOTE_CHARS = /["'“”‘’`´]/g;
const BULLET_PREFIX = /^\s*(?:[•●▪·*-])\s+/;

export interface PreprocessResult {
  cleanText: string;
  marks: LayoutMark[];
}

export function removeQuotes(text: string): string {
  return text.replace(QUOTE_CHARS, "");
}

export function preprocess(text: string): PreprocessResult {
  const lines = text.split(/\r?\n/);
  const marks: LayoutMark[] = [];
  const keptLines: string[] = [];
  let tokenCount = 0;
  let firstKeptLine = true;

  for (const rawLine of lines) {
    const bulleted = BULLET_PREFIX.test(rawLine);
    const line = removeQuotes(rawLine.replace(BULLET_PREFIX, "")).trim();
    if (!line) {
      continue;
    }
    if (bulleted) {
      marks.push({ kind: "bullet", before_token: tokenCount });
    } else if (!firstKeptLine) {
      marks.push({ kind: "line_break", before_token: tokenCount });
    }
    keptLines.push(line);
    tokenCount += tokenize(line).length;
    firstKeptLine = false;
  }

  return { cleanText: keptLines.join(" "), marks };
}
