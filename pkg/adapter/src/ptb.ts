/** Minimal reader for bracketed constituency trees: enough to pull out the
 * leaf words with their preterminal tags and to reject malformed input. */

import { ValidationError } from "./model.js";

export interface LeafPair {
  word: string;
  pos: string;
}

/** Leaf (word, preterminal-label) pairs in order; throws on imbalance. */
export function leafPairs(tree: string): LeafPair[] {
  const tokens = tree.match(/\(|\)|[^\s()]+/g) ?? [];
  const pairs: LeafPair[] = [];
  // stack of labels for currently open constituents
  const stack: string[] = [];
  let expectLabel = false;

  for (const tok of tokens) {
    if (tok === "(") {
      expectLabel = true;
    } else if (tok === ")") {
      if (stack.length === 0) {
        throw new ValidationError("unbalanced ')' in tree");
      }
      stack.pop();
    } else if (expectLabel) {
      stack.push(tok);
      expectLabel = false;
    } else {
      if (stack.length === 0) {
        throw new ValidationError(`word ${tok} outside any constituent`);
      }
      pairs.push({ word: tok, pos: stack[stack.length - 1] });
    }
  }
  if (stack.length !== 0 || expectLabel) {
    throw new ValidationError("unbalanced '(' in tree");
  }
  if (pairs.length === 0) {
    throw new ValidationError("tree has no leaves");
  }
  return pairs;
}

export function leafWords(tree: string): string[] {
  return leafPairs(tree).map((p) => p.word);
}
