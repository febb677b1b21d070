/** Turn raw requirement text into an annotated corpus record: clean the
 * text, tokenize, tag and lemmatize, and attach a constituency tree from
 * the sidecar treebank when one exists.
 *
 * When the tree's tokenization disagrees with ours, the tree wins: tokens
 * are rebuilt from its leaves (with POS from the preterminals) so the
 * leaf/token alignment invariant always holds for parsed requirements.
 * Requirements without a tree go out in degraded mode with a warning.
 */

import winkPosTagger from "wink-pos-tagger";

import { AnnotatedRequirement, LayoutMark, RawRequirement, Token, ValidationError } from "./model.js";
import { preprocess } from "./preprocess.js";
import { leafPairs } from "./ptb.js";
import { tokenize } from "./tokenize.js";

const tagger = winkPosTagger();

export interface AnnotateResult {
  record: AnnotatedRequirement;
  warning: string | null;
}

export type Treebank = Map<string, string>;

function tagWords(words: string[]): Token[] {
  return tagger.tagRawTokens(words).map((entry, index) => ({
    text: entry.value,
    lemma: (entry.lemma ?? entry.normal ?? entry.value).toLowerCase(),
    pos: entry.pos,
    index,
  }));
}

function lemmaOf(word: string): string {
  const [entry] = tagger.tagRawTokens([word]);
  return (entry.lemma ?? entry.normal ?? word).toLowerCase();
}

function tokensFromTree(tree: string): Token[] {
  return leafPairs(tree).map((pair, index) => ({
    text: pair.word,
    lemma: lemmaOf(pair.word),
    pos: pair.pos,
    index,
  }));
}

/** Re-anchor layout marks after the token list changed: each mark moves to
 * the first occurrence of its following token's text, searching forward. */
function remapMarks(marks: LayoutMark[], oldWords: string[], newWords: string[]): LayoutMark[] {
  const remapped: LayoutMark[] = [];
  let floor = 0;
  for (const mark of marks) {
    if (mark.before_token >= oldWords.length) {
      remapped.push({ ...mark, before_token: newWords.length });
      continue;
    }
    const anchor = oldWords[mark.before_token];
    let position = newWords.indexOf(anchor, floor);
    if (position < 0) position = Math.min(mark.before_token, newWords.length);
    remapped.push({ ...mark, before_token: position });
    floor = position;
  }
  return remapped;
}

export function annotate(raw: RawRequirement, treebank?: Treebank): AnnotateResult {
  const { cleanText, marks } = preprocess(raw.text);
  if (!cleanText.trim()) {
    throw new ValidationError(`${raw.id}: requirement text is empty after preprocessing`);
  }

  const words = tokenize(cleanText);
  const tree = treebank?.get(raw.id) ?? null;

  if (tree === null) {
    return {
      record: { id: raw.id, text: cleanText, tokens: tagWords(words), tree: null, marks },
      warning: `${raw.id}: no parse tree available; emitted without tree`,
    };
  }

  const leaves = leafPairs(tree).map((p) => p.word);
  const aligned = leaves.length === words.length && leaves.every((w, i) => w === words[i]);
  const tokens = tokensFromTree(tree);
  const finalMarks = aligned ? marks : remapMarks(marks, words, leaves);
  return {
    record: { id: raw.id, text: cleanText, tokens, tree, marks: finalMarks },
    warning: null,
  };
}

/** The receiving side's record invariants, checked before anything is
 * written so a conversion can never produce an invalid corpus. */
export function validateRecord(record: AnnotatedRequirement): void {
  record.tokens.forEach((token, position) => {
    if (!token.text) throw new ValidationError(`${record.id}: token ${position} has empty text`);
    if (!token.pos) throw new ValidationError(`${record.id}: token ${position} has empty pos`);
    if (token.index !== position) {
      throw new ValidationError(`${record.id}: token index ${token.index} != position ${position}`);
    }
  });
  for (const mark of record.marks) {
    if (mark.before_token < 0 || mark.before_token > record.tokens.length) {
      throw new ValidationError(`${record.id}: mark anchor ${mark.before_token} out of range`);
    }
  }
  if (record.tree !== null) {
    const words = leafPairs(record.tree).map((p) => p.word);
    const texts = record.tokens.map((t) => t.text);
    if (words.length !== texts.length || words.some((w, i) => w !== texts[i])) {
      throw new ValidationError(`${record.id}: tree leaves do not align with tokens`);
    }
  }
}
